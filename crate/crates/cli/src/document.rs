//! The JSON algebra-definition format.
//!
//! Tensors are sparse and index-based. Coefficients are exact rationals,
//! written either as JSON integers or as `"p/q"` strings; unlisted entries
//! are zero.

use std::collections::BTreeMap;
use std::fmt;

use anyhow::{anyhow, bail, Result};
use hopf_kernel::hopf::Element;
use hopf_kernel::{Field, Functional, Functional2, Matrix, Scalar, StructureConstants, Tensor2};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coef {
    Int(i64),
    Text(String),
}

impl fmt::Display for Coef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coef::Int(n) => write!(f, "{n}"),
            Coef::Text(s) => write!(f, "{s:?}"),
        }
    }
}

impl From<&Scalar> for Coef {
    fn from(s: &Scalar) -> Self {
        Coef::Text(s.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Prime { prime: u64 },
}

impl FieldSpec {
    fn resolve(&self) -> Result<Field> {
        match self {
            FieldSpec::Named(s) if s == "rationals" => Ok(Field::Rationals),
            FieldSpec::Named(s) => bail!("field: unknown field {s:?} (expected \"rationals\" or {{\"prime\": p}})"),
            FieldSpec::Prime { prime } => Field::prime(*prime).map_err(|e| anyhow!("field: {e}")),
        }
    }

    fn of(field: Field) -> Self {
        match field {
            Field::Rationals => FieldSpec::Named("rationals".into()),
            Field::Prime(p) => FieldSpec::Prime { prime: p },
        }
    }
}

/// `sigma` is either a dense `n × n` matrix or `{"entries": [[i, j, v], …]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SigmaSpec {
    Dense(Vec<Vec<Coef>>),
    Sparse { entries: Vec<(usize, usize, Coef)> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<(usize, Coef)>>,
    pub mult: Vec<(usize, usize, usize, Coef)>,
    pub comult: Vec<(usize, usize, usize, Coef)>,
    pub counit: Vec<(usize, Coef)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<(usize, usize, Coef)>>,
    #[serde(default, rename = "R", skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<(Coef, usize, usize)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<SigmaSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub characters: BTreeMap<String, Vec<Coef>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub grouplikes: BTreeMap<String, Vec<(usize, Coef)>>,
}

/// A parsed finite-dimensional source: raw tables plus optional
/// (co)quasitriangular data and declared characters and grouplikes.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteSource {
    pub field: Field,
    pub constants: StructureConstants,
    pub r: Option<Tensor2>,
    pub sigma: Option<Functional2>,
    pub characters: Vec<(String, Functional)>,
    pub grouplikes: Vec<(String, Element)>,
}

struct Reader {
    field: Field,
    n: usize,
}

impl Reader {
    fn coef(&self, c: &Coef, loc: &str) -> Result<Scalar> {
        let q = match c {
            Coef::Int(n) => Scalar::from_int(*n),
            Coef::Text(s) => s.parse::<Scalar>().map_err(|_| anyhow!("{loc}: coefficient {c} is not an exact rational"))?,
        };
        self.field.try_embed(&q).ok_or_else(|| anyhow!("{loc}: coefficient {c} has a denominator divisible by {}", self.field))
    }

    fn index(&self, i: usize, loc: &str) -> Result<usize> {
        if i >= self.n {
            bail!("{loc}: index {i} out of range (basis has {} elements)", self.n);
        }
        Ok(i)
    }
}

fn no_duplicate<K: Ord + fmt::Debug>(seen: &mut BTreeMap<K, usize>, key: K, loc: &str) -> Result<()> {
    if let Some(first) = seen.get(&key) {
        bail!("{loc}: duplicate entry {key:?} (first given at position {first})");
    }
    let pos = seen.len();
    seen.insert(key, pos);
    Ok(())
}

impl AlgebraDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| anyhow!("{e}"))
    }

    /// Pretty JSON with one table entry per line.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("document serializes");
        let mut out = String::new();
        write_value(&mut out, &v, 0);
        out
    }

    /// Validates indices and coefficients. `field` overrides the document's
    /// field when the document is over the rationals; a conflicting prime is
    /// an error.
    pub fn parse(&self, field: Option<Field>) -> Result<FiniteSource> {
        let declared = match &self.field {
            Some(spec) => spec.resolve()?,
            None => Field::Rationals,
        };
        let field = match (declared, field) {
            (d, None) => d,
            (Field::Rationals, Some(f)) => f,
            (d, Some(f)) if d == f => f,
            (d, Some(f)) => bail!("field: document is over {d}, but {f} was requested"),
        };
        let n = self.basis.len();
        if n == 0 {
            bail!("basis: empty");
        }
        let rd = Reader { field, n };
        let labels: Vec<&str> = self.basis.iter().map(String::as_str).collect();
        for (k, l) in labels.iter().enumerate() {
            if labels[..k].contains(l) {
                bail!("basis[{k}]: duplicate label {l:?}");
            }
        }
        let mut sc = StructureConstants::empty(self.name.clone(), &labels);
        sc.counit = vec![field.zero(); n];

        if let Some(unit) = &self.unit {
            let mut u = Element::zero();
            let mut seen = BTreeMap::new();
            for (p, (i, c)) in unit.iter().enumerate() {
                let loc = format!("unit[{p}]");
                no_duplicate(&mut seen, *i, &loc)?;
                u.add_term(rd.index(*i, &loc)?, rd.coef(c, &loc)?);
            }
            sc.unit = u;
        } else {
            sc.unit = Element::term(field.one(), 0);
        }

        let mut seen = BTreeMap::new();
        for (p, (i, j, k, c)) in self.mult.iter().enumerate() {
            let loc = format!("mult[{p}]");
            no_duplicate(&mut seen, (*i, *j, *k), &loc)?;
            let (i, j, k) = (rd.index(*i, &loc)?, rd.index(*j, &loc)?, rd.index(*k, &loc)?);
            sc.mult[i][j].add_term(k, rd.coef(c, &loc)?);
        }

        let mut seen = BTreeMap::new();
        for (p, (i, j, k, c)) in self.comult.iter().enumerate() {
            let loc = format!("comult[{p}]");
            no_duplicate(&mut seen, (*i, *j, *k), &loc)?;
            let (i, j, k) = (rd.index(*i, &loc)?, rd.index(*j, &loc)?, rd.index(*k, &loc)?);
            sc.comult[i].add_term((j, k), rd.coef(c, &loc)?);
        }

        let mut seen = BTreeMap::new();
        for (p, (i, c)) in self.counit.iter().enumerate() {
            let loc = format!("counit[{p}]");
            no_duplicate(&mut seen, *i, &loc)?;
            sc.counit[rd.index(*i, &loc)?] = rd.coef(c, &loc)?;
        }
        let missing: Vec<String> = (0..n).filter(|i| !seen.contains_key(i)).map(|i| i.to_string()).collect();
        if !missing.is_empty() {
            bail!("counit: missing entries for indices {}", missing.join(", "));
        }

        if let Some(s) = &self.antipode {
            let mut m = Matrix::zeros(n, n).map(|_| field.zero());
            let mut seen = BTreeMap::new();
            for (p, (i, j, c)) in s.iter().enumerate() {
                let loc = format!("antipode[{p}]");
                no_duplicate(&mut seen, (*i, *j), &loc)?;
                // S(e_i) has coefficient c on e_j
                m[(rd.index(*j, &loc)?, rd.index(*i, &loc)?)] = rd.coef(c, &loc)?;
            }
            sc.antipode = Some(m);
        }

        let r = match &self.r {
            Some(terms) => {
                let mut t = Vec::new();
                let mut seen = BTreeMap::new();
                for (p, (c, i, j)) in terms.iter().enumerate() {
                    let loc = format!("R[{p}]");
                    no_duplicate(&mut seen, (*i, *j), &loc)?;
                    t.push((rd.coef(c, &loc)?, rd.index(*i, &loc)?, rd.index(*j, &loc)?));
                }
                let mut m = Tensor2::from_triples(n, &t);
                m.0 = m.0.map(|c| field.embed(c));
                Some(m)
            }
            None => None,
        };

        let sigma = match &self.sigma {
            Some(spec) => Some(Functional2(self.sigma_matrix(spec, &rd)?)),
            None => None,
        };

        let mut characters = Vec::new();
        for (name, values) in &self.characters {
            let loc = format!("characters.{name}");
            if values.len() != n {
                bail!("{loc}: expected {n} values, found {}", values.len());
            }
            let vals = values.iter().enumerate().map(|(k, c)| rd.coef(c, &format!("{loc}[{k}]"))).collect::<Result<_>>()?;
            characters.push((name.clone(), Functional(vals)));
        }

        let mut grouplikes = Vec::new();
        for (name, terms) in &self.grouplikes {
            let mut e = Element::zero();
            let mut seen = BTreeMap::new();
            for (p, (i, c)) in terms.iter().enumerate() {
                let loc = format!("grouplikes.{name}[{p}]");
                no_duplicate(&mut seen, *i, &loc)?;
                e.add_term(rd.index(*i, &loc)?, rd.coef(c, &loc)?);
            }
            grouplikes.push((name.clone(), e));
        }

        Ok(FiniteSource { field, constants: sc, r, sigma, characters, grouplikes })
    }

    fn sigma_matrix(&self, spec: &SigmaSpec, rd: &Reader) -> Result<Matrix> {
        let n = rd.n;
        let mut m = Matrix::zeros(n, n).map(|_| rd.field.zero());
        match spec {
            SigmaSpec::Dense(rows) => {
                if rows.len() != n {
                    bail!("sigma: expected {n} rows, found {}", rows.len());
                }
                for (i, row) in rows.iter().enumerate() {
                    if row.len() != n {
                        bail!("sigma[{i}]: expected {n} entries, found {}", row.len());
                    }
                    for (j, c) in row.iter().enumerate() {
                        m[(i, j)] = rd.coef(c, &format!("sigma[{i}][{j}]"))?;
                    }
                }
            }
            SigmaSpec::Sparse { entries } => {
                let mut seen = BTreeMap::new();
                for (p, (i, j, c)) in entries.iter().enumerate() {
                    let loc = format!("sigma.entries[{p}]");
                    no_duplicate(&mut seen, (*i, *j), &loc)?;
                    m[(rd.index(*i, &loc)?, rd.index(*j, &loc)?)] = rd.coef(c, &loc)?;
                }
            }
        }
        Ok(m)
    }

    /// The canonical document for `src`: every nonzero coefficient as a
    /// string, tables in basis order, `sigma` dense.
    pub fn emit(src: &FiniteSource) -> Self {
        let sc = &src.constants;
        let n = sc.dim();
        let coef = |c: &Scalar| Coef::from(c);
        let mut mult = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in sc.mult[i][j].iter() {
                    mult.push((i, j, *k, coef(c)));
                }
            }
        }
        let mut comult = Vec::new();
        for i in 0..n {
            for ((j, k), c) in sc.comult[i].iter() {
                comult.push((i, *j, *k, coef(c)));
            }
        }
        let antipode = sc.antipode.as_ref().map(|m| {
            let mut out = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if !m[(j, i)].is_zero() {
                        out.push((i, j, coef(&m[(j, i)])));
                    }
                }
            }
            out
        });
        let r = src.r.as_ref().map(|t| {
            let mut out = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if !t.0[(i, j)].is_zero() {
                        out.push((coef(&t.0[(i, j)]), i, j));
                    }
                }
            }
            out
        });
        let sigma = src.sigma.as_ref().map(|s| SigmaSpec::Dense((0..n).map(|i| s.0.row(i).iter().map(coef).collect()).collect()));
        AlgebraDocument {
            name: sc.name.clone(),
            field: Some(FieldSpec::of(src.field)),
            basis: sc.labels.clone(),
            unit: Some(sc.unit.iter().map(|(i, c)| (*i, coef(c))).collect()),
            mult,
            comult,
            counit: sc.counit.iter().enumerate().map(|(i, c)| (i, coef(c))).collect(),
            antipode,
            r,
            sigma,
            characters: src.characters.iter().map(|(k, f)| (k.clone(), f.0.iter().map(coef).collect())).collect(),
            grouplikes: src.grouplikes.iter().map(|(k, e)| (k.clone(), e.iter().map(|(i, c)| (*i, coef(c))).collect())).collect(),
        }
    }
}

fn write_value(out: &mut String, v: &serde_json::Value, depth: usize) {
    use serde_json::Value;
    let pad = "  ".repeat(depth + 1);
    let close = "  ".repeat(depth);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (k, (key, val)) in map.iter().enumerate() {
                out.push_str(&format!("{pad}{}: ", Value::String(key.clone())));
                write_value(out, val, depth + 1);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&format!("{close}}}"));
        }
        Value::Array(items) if items.iter().any(|x| x.is_array()) => {
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&item.to_string());
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&format!("{close}]"));
        }
        _ => out.push_str(&v.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const C2: &str = r#"{
        "name": "C2",
        "basis": ["1", "g"],
        "mult": [[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1]],
        "comult": [[0,0,0,1],[1,1,1,1]],
        "counit": [[0,1],[1,"1"]],
        "R": [["1/2",0,0],["1/2",0,1],["1/2",1,0],["-1/2",1,1]]
    }"#;

    #[test]
    fn parses_small_document() {
        let src = AlgebraDocument::from_json(C2).unwrap().parse(None).unwrap();
        assert_eq!(src.constants.mult[1][1], Element::basis(0));
        assert_eq!(src.r.unwrap().0[(1, 1)], Scalar::ratio(-1, 2));
        assert!(src.constants.antipode.is_none());
    }

    #[test]
    fn locations_in_errors() {
        let bad = C2.replace("[[0,1],[1,\"1\"]]", "[[0,1]]");
        let err = AlgebraDocument::from_json(&bad).unwrap().parse(None).unwrap_err().to_string();
        assert_eq!(err, "counit: missing entries for indices 1");
        let bad = C2.replace("[1,1,0,1]]", "[1,1,5,1]]");
        let err = AlgebraDocument::from_json(&bad).unwrap().parse(None).unwrap_err().to_string();
        assert!(err.starts_with("mult[3]: index 5 out of range"), "{err}");
        let bad = C2.replace("\"-1/2\"", "\"-1/0\"");
        let err = AlgebraDocument::from_json(&bad).unwrap().parse(None).unwrap_err().to_string();
        assert!(err.starts_with("R[3]: coefficient"), "{err}");
        let bad = C2.replace("[0,1,1,1],", "[0,1,1,1],[0,1,1,2],");
        let err = AlgebraDocument::from_json(&bad).unwrap().parse(None).unwrap_err().to_string();
        assert!(err.starts_with("mult[2]: duplicate entry"), "{err}");
    }

    #[test]
    fn prime_field_rejects_bad_denominator() {
        let err = AlgebraDocument::from_json(C2).unwrap().parse(Some(Field::prime(3).unwrap())).unwrap();
        assert_eq!(err.r.unwrap().0[(0, 0)], Field::prime(3).unwrap().embed(&Scalar::ratio(1, 2)));
        let doc = C2.replace("\"1/2\",0,0", "\"1/3\",0,0");
        let err = AlgebraDocument::from_json(&doc).unwrap().parse(Some(Field::prime(3).unwrap())).unwrap_err();
        assert!(err.to_string().starts_with("R[0]: coefficient \"1/3\" has a denominator divisible by F_3"), "{err}");
    }

    #[test]
    fn sparse_and_dense_sigma_agree() {
        let base = C2.replace(r#""R": [["1/2",0,0],["1/2",0,1],["1/2",1,0],["-1/2",1,1]]"#, r#""sigma": SIGMA"#);
        let dense = base.replace("SIGMA", "[[1,1],[1,1]]");
        let sparse = base.replace("SIGMA", r#"{"entries": [[0,0,1],[0,1,1],[1,0,1],[1,1,1]]}"#);
        let a = AlgebraDocument::from_json(&dense).unwrap().parse(None).unwrap();
        let b = AlgebraDocument::from_json(&sparse).unwrap().parse(None).unwrap();
        assert!(a.sigma.is_some() && a.r.is_none());
        assert_eq!(a, b);
    }
}
