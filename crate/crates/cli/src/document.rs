//! JSON element documents.
//!
//! ```json
//! {"family":"B","rank":3,"model":"binfty","rows":[["1","1","1","1"],["2","2","2"],["3","0"]]}
//! {"family":"A","rank":2,"model":"cliff","k":{"1":[0,0],"2":[0]}}
//! {"family":"A","rank":2,"model":"hw","rows":[["1","1"],["2"]],"lambda":[1,1]}
//! ```

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use tabcrystal_core::binfty::MarginallyLarge;
use tabcrystal_core::cliff::{self, CliffElement};
use tabcrystal_core::tableau::shape_for_weight;
use tabcrystal_core::{Family, HighestWeightCrystal, Letter, Tableau, TypeSpec, Weight};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Hw,
    Binfty,
    Cliff,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Hw => "hw",
            Model::Binfty => "binfty",
            Model::Cliff => "cliff",
        })
    }
}

/// `k` tuples keyed `"1"`, `"2"`, … in numeric order.
#[derive(Debug, Clone, PartialEq, Eq)]
struct KMap(Vec<Vec<u64>>);

impl Serialize for KMap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (i, beta) in self.0.iter().enumerate() {
            map.serialize_entry(&(i + 1).to_string(), beta)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for KMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, Vec<u64>>::deserialize(d)?;
        let mut keyed = BTreeMap::new();
        for (key, beta) in raw {
            let i: usize = key
                .parse()
                .ok()
                .filter(|&i| i >= 1)
                .ok_or_else(|| D::Error::custom(format!("k key {key:?} is not a positive row index")))?;
            keyed.insert(i, beta);
        }
        if keyed.keys().copied().ne(1..=keyed.len()) {
            return Err(D::Error::custom("k keys must be exactly 1..=n"));
        }
        Ok(KMap(keyed.into_values().collect()))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    family: String,
    rank: usize,
    model: Model,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rows: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<KMap>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lambda: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    Hw { lambda: Weight, tableau: Tableau },
    Binfty(MarginallyLarge),
    Cliff(CliffElement),
}

/// A validated element together with its type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub spec: TypeSpec,
    pub element: Element,
}

impl Document {
    pub fn model(&self) -> Model {
        match self.element {
            Element::Hw { .. } => Model::Hw,
            Element::Binfty(_) => Model::Binfty,
            Element::Cliff(_) => Model::Cliff,
        }
    }

    pub fn hw(spec: &TypeSpec, lambda: Weight, tableau: Tableau) -> Document {
        Document { spec: spec.clone(), element: Element::Hw { lambda, tableau } }
    }

    pub fn binfty(spec: &TypeSpec, t: MarginallyLarge) -> Document {
        Document { spec: spec.clone(), element: Element::Binfty(t) }
    }

    pub fn cliff(spec: &TypeSpec, c: CliffElement) -> Document {
        Document { spec: spec.clone(), element: Element::Cliff(c) }
    }

    /// Compact JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.raw()).expect("documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Document, CliError> {
        let raw: Raw = serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed document: {e}")))?;
        Document::from_raw(raw)
    }

    fn raw(&self) -> Raw {
        let mut raw = Raw {
            family: self.spec.family().tag().to_string(),
            rank: self.spec.n(),
            model: self.model(),
            rows: None,
            k: None,
            lambda: None,
        };
        match &self.element {
            Element::Hw { lambda, tableau } => {
                raw.rows = Some(rows_to_strings(tableau));
                raw.lambda = Some(lambda.as_slice().to_vec());
            }
            Element::Binfty(t) => raw.rows = Some(rows_to_strings(t.as_tableau())),
            Element::Cliff(c) => raw.k = Some(KMap(c.factors().to_vec())),
        }
        raw
    }

    fn from_raw(raw: Raw) -> Result<Document, CliError> {
        let family = Family::from_tag(&raw.family)
            .ok_or_else(|| CliError::Input(format!("family: unknown family {:?}", raw.family)))?;
        let spec = TypeSpec::new(family, raw.rank)?;
        let need_rows = |rows: Option<Vec<Vec<String>>>| {
            rows.ok_or_else(|| CliError::Input(format!("rows: required for model {}", raw.model)))
        };
        let forbid = |present: bool, field: &str| {
            if present {
                Err(CliError::Input(format!("{field}: not allowed for model {}", raw.model)))
            } else {
                Ok(())
            }
        };
        let element = match raw.model {
            Model::Hw => {
                forbid(raw.k.is_some(), "k")?;
                let lambda = Weight::new(
                    raw.lambda.ok_or_else(|| CliError::Input(String::from("lambda: required for model hw")))?,
                );
                let tableau = parse_rows(&spec, &need_rows(raw.rows)?)?;
                let crystal = HighestWeightCrystal::new(&spec, lambda.clone())?;
                let shape = shape_for_weight(&spec, &lambda)?;
                if tableau.shape() != shape || !crystal.contains(&tableau) {
                    return Err(CliError::Input(format!("rows: not an element of B({lambda})")));
                }
                Element::Hw { lambda, tableau }
            }
            Model::Binfty => {
                forbid(raw.k.is_some(), "k")?;
                forbid(raw.lambda.is_some(), "lambda")?;
                let t = parse_rows(&spec, &need_rows(raw.rows)?)?;
                Element::Binfty(MarginallyLarge::new(&spec, t).map_err(|e| CliError::Input(format!("rows: {e}")))?)
            }
            Model::Cliff => {
                forbid(raw.rows.is_some(), "rows")?;
                forbid(raw.lambda.is_some(), "lambda")?;
                let KMap(k) = raw.k.ok_or_else(|| CliError::Input(String::from("k: required for model cliff")))?;
                let c = CliffElement::new(k);
                cliff::cliff_zero(&spec)?;
                if !cliff::validate_cliff(&spec, &c) {
                    return Err(CliError::Input(format!("k: {c} violates the inequality chains")));
                }
                Element::Cliff(c)
            }
        };
        Ok(Document { spec, element })
    }
}

pub fn rows_to_strings(t: &Tableau) -> Vec<Vec<String>> {
    t.rows().iter().map(|row| row.iter().map(Letter::to_string).collect()).collect()
}

fn parse_rows(spec: &TypeSpec, rows: &[Vec<String>]) -> Result<Tableau, CliError> {
    let mut out = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let mut letters = Vec::with_capacity(row.len());
        for (c, s) in row.iter().enumerate() {
            let code: i32 = s
                .parse()
                .map_err(|_| CliError::Input(format!("rows[{r}][{c}]: {s:?} is not a letter")))?;
            let x = Letter::new(code);
            spec.check_letter(x).map_err(|e| CliError::Input(format!("rows[{r}][{c}]: {e}")))?;
            letters.push(x);
        }
        out.push(letters);
    }
    Tableau::new(spec, out).map_err(|e| CliError::Input(format!("rows: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use tabcrystal_core::binfty::{binfty_lower, t_infinity};

    #[test]
    fn canonical_text() {
        let a2 = TypeSpec::new(Family::A, 2).unwrap();
        let doc = Document::binfty(&a2, t_infinity(&a2));
        assert_eq!(doc.to_json(), r#"{"family":"A","rank":2,"model":"binfty","rows":[["1","1"],["2"]]}"#);
        let doc = Document::cliff(&a2, cliff::cliff_zero(&a2).unwrap());
        assert_eq!(doc.to_json(), r#"{"family":"A","rank":2,"model":"cliff","k":{"1":[0,0],"2":[0]}}"#);
        let b3 = TypeSpec::new(Family::B, 3).unwrap();
        let t = binfty_lower(&b3, 3, &t_infinity(&b3)).unwrap();
        let doc = Document::binfty(&b3, t);
        assert!(doc.to_json().contains(r#""rows":[["1","1","1","1"],["2","2","2"],["3","0"]]"#));
        assert_eq!(Document::from_json(&doc.to_json()).unwrap(), doc);
    }

    #[test]
    fn many_rows_keep_numeric_key_order() {
        let a10 = TypeSpec::new(Family::A, 10).unwrap();
        let text = Document::cliff(&a10, cliff::cliff_zero(&a10).unwrap()).to_json();
        assert!(text.contains(r#""9":[0,0],"10":[0]"#));
        assert_eq!(Document::from_json(&text).unwrap().to_json(), text);
    }

    #[test]
    fn rejects_bad_input() {
        let bad = [
            "{",
            r#"{"family":"E","rank":6,"model":"binfty","rows":[]}"#,
            r#"{"family":"A","rank":2,"model":"binfty","rows":[["1","x"],["2"]]}"#,
            r#"{"family":"A","rank":2,"model":"binfty","rows":[["1"],["2"]]}"#,
            r#"{"family":"A","rank":2,"model":"hw","rows":[["1"]]}"#,
            r#"{"family":"A","rank":2,"model":"hw","rows":[["1","1"]],"lambda":[1,0]}"#,
            r#"{"family":"A","rank":2,"model":"cliff","k":{"1":[1,0],"2":[0]}}"#,
            r#"{"family":"A","rank":2,"model":"cliff","k":{"1":[0,0],"3":[0]}}"#,
            r#"{"family":"G","rank":2,"model":"cliff","k":{"1":[0],"2":[0]}}"#,
            r#"{"family":"A","rank":2,"model":"binfty","rows":[["1","1"],["2"]],"extra":1}"#,
        ];
        for text in bad {
            assert!(Document::from_json(text).is_err(), "{text}");
        }
        let ok = r#"{"family":"A","rank":2,"model":"hw","rows":[["1","2"],["3"]],"lambda":[1,1]}"#;
        assert_eq!(Document::from_json(ok).unwrap().to_json(), ok);
    }
}
