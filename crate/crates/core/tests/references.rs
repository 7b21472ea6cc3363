use qtcodes::analysis::{Optimality, Verdict};
use qtcodes::published::{references, verify_all, ClaimedOptimality};

#[test]
fn non_audited_references_reproduce() {
    let report = verify_all().unwrap();
    assert!(report.all_match);
    assert_eq!(report.rows.len(), 6);
    for row in &report.rows {
        assert_eq!(row.oracle_agrees, Some(true), "{}", row.id);
        assert_eq!(row.rank, row.card_log2, "{}", row.id);
        if !row.audited {
            assert_eq!(row.verdict, Verdict::Match, "{}", row.id);
            assert_eq!(row.card_log2, row.claimed_card_log2, "{}", row.id);
        }
    }
}

#[test]
fn audited_row_records_its_discrepancies() {
    let report = verify_all().unwrap();
    let row = report.rows.iter().find(|r| r.id == "a2_n3_l3").unwrap();
    assert!(row.audited);
    assert_eq!(row.computed.unwrap().as_array(), [18, 2, 8]);
    assert_eq!(row.verdict, Verdict::Mismatch);
    assert!(row.notes.iter().any(|n| n.contains("g_1/g = (x^4+x^3+x+1)/(x+1) = x^3+1")));
}

#[test]
fn lee_distance_and_bound_claims() {
    let report = verify_all().unwrap();
    let row = report.rows.iter().find(|r| r.id == "special_a2_n3_l2").unwrap();
    assert_eq!((row.claimed_lee, row.d_lee), (Some(8), Some(8)));
    assert_eq!((row.claimed_bound, row.bound), (Some(8), Some(8)));
}

#[test]
fn optimality_labels_are_checked_against_the_table() {
    let report = verify_all().unwrap();
    let by_id = |id: &str| report.rows.iter().find(|r| r.id == id).unwrap();
    let r16 = by_id("special_a2_n4_l2");
    assert_eq!(r16.claimed_optimality, Some(ClaimedOptimality::Suboptimal));
    assert_eq!(r16.table_optimality, Optimality::Optimal);
    assert!(r16.notes.iter().any(|n| n.contains("claimed suboptimal")));
    assert_eq!(by_id("special_a2_n4_l3").table_optimality, Optimality::BelowBestKnown);
    assert_eq!(by_id("a1_n3_l2").table_optimality, Optimality::Optimal);
}

#[test]
fn alternate_reading_of_the_b_spanners_is_reported() {
    let report = verify_all().unwrap();
    let row = report.rows.iter().find(|r| r.id == "b_n9_l2").unwrap();
    assert!(row.notes.iter().any(|n| n.contains("span dimension 4")));
}

#[test]
fn report_serializes() {
    let json = serde_json::to_value(verify_all().unwrap()).unwrap();
    assert_eq!(json["rows"][0]["verdict"], "match");
    assert_eq!(json["rows"][1]["verdict"], "mismatch");
    assert_eq!(references().iter().filter(|r| r.audited).count(), 1);
}
