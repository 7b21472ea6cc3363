//! JSON construction recipes.
//!
//! ```json
//! {"n": 9, "l": 2, "family": "B", "q": ["x", "x^2+x"], "f": "x+1", "g_poly": "x^7+x^6+x^4+x^3+x+1"}
//! ```
//!
//! Field use by family:
//!
//! | family      | fields                                   |
//! |-------------|------------------------------------------|
//! | `A1`, `A2`  | `g`: list of `l` polynomials             |
//! | `B`         | `q`: list of `l`, `f`: one, `g_poly`: one |
//! | `SpecialA2` | `g_poly`: one, `f`: list of `l`           |

use serde::{Deserialize, Serialize};

use crate::construct::{Construction, Family, QtGenerator};
use crate::error::{Error, Result};
use crate::gf2poly::BinPoly;

/// A single polynomial or a list of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyArg {
    One(BinPoly),
    Many(Vec<BinPoly>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Recipe {
    pub n: usize,
    pub l: usize,
    pub family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<Vec<BinPoly>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<Vec<BinPoly>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<PolyArg>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g_poly: Option<BinPoly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn missing(family: Family, field: &str) -> Error {
    Error::Recipe(format!("family {family} needs field {field:?}"))
}

impl Recipe {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Recipe(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("recipes always serialize")
    }

    pub fn from_construction(n: usize, c: &Construction) -> Self {
        let mut r = Recipe { n, l: c.index(), family: c.family(), g: None, q: None, f: None, g_poly: None, note: None };
        match c {
            Construction::A1 { g } | Construction::A2 { g } => r.g = Some(g.clone()),
            Construction::B { q, f, g } => {
                r.q = Some(q.clone());
                r.f = Some(PolyArg::One(f.clone()));
                r.g_poly = Some(g.clone());
            }
            Construction::SpecialA2 { g, f } => {
                r.g_poly = Some(g.clone());
                r.f = Some(PolyArg::Many(f.clone()));
            }
        }
        r
    }

    fn check_len(&self, field: &str, len: usize) -> Result<()> {
        if len == self.l {
            Ok(())
        } else {
            Err(Error::Recipe(format!("field {field:?} has {len} entries but l = {}", self.l)))
        }
    }

    pub fn construction(&self) -> Result<Construction> {
        let fam = self.family;
        match fam {
            Family::A1 | Family::A2 => {
                let g = self.g.clone().ok_or_else(|| missing(fam, "g"))?;
                self.check_len("g", g.len())?;
                Ok(if fam == Family::A1 { Construction::A1 { g } } else { Construction::A2 { g } })
            }
            Family::B => {
                let q = self.q.clone().ok_or_else(|| missing(fam, "q"))?;
                self.check_len("q", q.len())?;
                let f = match &self.f {
                    Some(PolyArg::One(f)) => f.clone(),
                    Some(PolyArg::Many(_)) => return Err(Error::Recipe("family B takes a single \"f\"".into())),
                    None => return Err(missing(fam, "f")),
                };
                let g = self.g_poly.clone().ok_or_else(|| missing(fam, "g_poly"))?;
                Ok(Construction::B { q, f, g })
            }
            Family::SpecialA2 => {
                let g = self.g_poly.clone().ok_or_else(|| missing(fam, "g_poly"))?;
                let f = match &self.f {
                    Some(PolyArg::Many(f)) => f.clone(),
                    Some(PolyArg::One(f)) => vec![f.clone()],
                    None => return Err(missing(fam, "f")),
                };
                self.check_len("f", f.len())?;
                Ok(Construction::SpecialA2 { g, f })
            }
        }
    }

    pub fn generator(&self) -> Result<QtGenerator> {
        QtGenerator::new(self.n, self.construction()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_b_recipe() {
        let r = Recipe::from_json(
            r#"{"n": 9, "l": 2, "family": "B", "q": ["x", "x^2+x"], "f": "x+1", "g_poly": "x^7+x^6+x^4+x^3+x+1"}"#,
        )
        .unwrap();
        let c = r.construction().unwrap();
        assert_eq!(c.family(), Family::B);
        assert_eq!(Recipe::from_construction(9, &c), r);
    }

    #[test]
    fn special_a2_takes_list() {
        let r = Recipe::from_json(r#"{"n":3,"l":2,"family":"SpecialA2","g_poly":"x+1","f":["x^3+x+1","x^3+x^2+1"]}"#)
            .unwrap();
        assert_eq!(r.construction().unwrap().index(), 2);
        let back = Recipe::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn rejects_bad_recipes() {
        assert!(Recipe::from_json(r#"{"n":3,"l":3,"family":"A1","g":["x+1"]}"#).unwrap().construction().is_err());
        assert!(Recipe::from_json(r#"{"n":3,"l":1,"family":"A1"}"#).unwrap().construction().is_err());
        assert!(Recipe::from_json(r#"{"n":3,"l":1,"family":"A7","g":["1"]}"#).is_err());
        assert!(Recipe::from_json(r#"{"n":3,"l":1,"family":"A1","g":["x^"]}"#).is_err());
        assert!(Recipe::from_json(r#"{"n":3,"l":1,"family":"A1","g":["1"],"extra":1}"#).is_err());
    }
}
