//! The JSON instance format.
//!
//! A document is either the compact `thin_distance` form
//!
//! ```json
//! { "thin_distance": { "K": 100, "matrix": [[0, 3], [2, 0]] }, "kfold": 2 }
//! ```
//!
//! which expands to the truncated-sum instance `V_K` with the matrix as an
//! enriched category, or an explicit document with the sections
//! `objects`, `morphisms`, `identities`, `compose`, `tensors`, `unit`,
//! `alpha`, optional `c`, optional `eta`, optional `kfold` and optional
//! `enriched`. Every table is either a list of rows whose last entry is
//! the cell value (`[g, f, g∘f]`, `[f, g, f⊗g]`, `[u, v, w, α]`,
//! `[x, y, c]`, `[a, b, c, d, η]`, `[a, b, c, M]`, `[a, j]`) or the string
//! `"induced"`, meaning the unique morphism of the right type in a thin
//! category. Omitted tensor-morphism and associator tables are induced.

use braidcat::fincat::instances::truncated_sum;
use braidcat::fincat::{
    check_monoidal, check_symmetry, eta_from_symmetry, Family, FinCategory, FinEnrichedCategory, FinMonoidalInstance,
    FincatError, Tensor,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InducedTag {
    Induced,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Table {
    Induced(InducedTag),
    Rows(Vec<Vec<usize>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub id: usize,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorDoc {
    pub objects: Vec<Vec<usize>>,
    #[serde(default)]
    pub morphisms: Option<Table>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EtaDoc {
    pub i: usize,
    pub j: usize,
    pub cells: Table,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnrichedDoc {
    pub objects: usize,
    pub hom: Vec<Vec<usize>>,
    #[serde(rename = "M")]
    pub m: Table,
    pub j: Table,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThinDistanceDoc {
    #[serde(rename = "K")]
    pub k: usize,
    pub matrix: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDoc {
    #[serde(default)]
    pub objects: Option<usize>,
    #[serde(default)]
    pub morphisms: Option<Vec<MorphismDoc>>,
    #[serde(default)]
    pub identities: Option<Vec<usize>>,
    #[serde(default)]
    pub compose: Option<Table>,
    #[serde(default)]
    pub tensors: Option<Vec<TensorDoc>>,
    #[serde(default)]
    pub unit: Option<usize>,
    #[serde(default)]
    pub alpha: Option<Vec<Table>>,
    #[serde(default)]
    pub c: Option<Table>,
    #[serde(default)]
    pub eta: Option<Vec<EtaDoc>>,
    #[serde(default)]
    pub kfold: Option<usize>,
    #[serde(default)]
    pub enriched: Option<Vec<EnrichedDoc>>,
    #[serde(default)]
    pub thin_distance: Option<ThinDistanceDoc>,
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("malformed document: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("{section}: {source}")]
    Invalid {
        section: String,
        #[source]
        source: FincatError,
    },
}

impl LoadError {
    fn invalid(section: impl Into<String>) -> impl FnOnce(FincatError) -> LoadError {
        let section = section.into();
        move |source| LoadError::Invalid { section, source }
    }
}

#[derive(Debug, Clone)]
pub struct LoadedInstance {
    pub v: FinMonoidalInstance,
    pub enriched: Vec<FinEnrichedCategory>,
}

fn schema(msg: impl Into<String>) -> LoadError {
    LoadError::Schema(msg.into())
}

/// A family from `rows` of `arity` keys followed by the value; keys are
/// flattened with `index`.
fn family(table: &Table, what: &str, arity: usize, len: usize, index: impl Fn(&[usize]) -> Option<usize>) -> Result<Family, LoadError> {
    match table {
        Table::Induced(_) => Ok(Family::induced()),
        Table::Rows(rows) => {
            let mut fam = Family::dense(len);
            for (r, row) in rows.iter().enumerate() {
                if row.len() != arity + 1 {
                    return Err(schema(format!("{what} row {r} has {} entries, expected {}", row.len(), arity + 1)));
                }
                let idx = index(&row[..arity]).ok_or_else(|| schema(format!("{what} row {r} is out of range: {row:?}")))?;
                fam.set(idx, row[arity]);
            }
            Ok(fam)
        }
    }
}

fn flat_checked(n: usize, keys: &[usize]) -> Option<usize> {
    keys.iter().try_fold(0usize, |acc, &x| (x < n).then_some(acc * n + x))
}

fn square(rows: &[Vec<usize>], n: usize, what: &str) -> Result<Vec<usize>, LoadError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(schema(format!("{what} must be a {n}×{n} table")));
    }
    Ok(rows.iter().flatten().copied().collect())
}

fn load_thin_distance(doc: &InstanceDoc, td: &ThinDistanceDoc) -> Result<LoadedInstance, LoadError> {
    let explicit = doc.objects.is_some()
        || doc.morphisms.is_some()
        || doc.compose.is_some()
        || doc.tensors.is_some()
        || doc.alpha.is_some()
        || doc.c.is_some()
        || doc.eta.is_some()
        || doc.enriched.is_some();
    if explicit {
        return Err(schema("thin_distance cannot be combined with explicit tables"));
    }
    let n = td.matrix.len();
    let hom = square(&td.matrix, n, "thin_distance matrix")?;
    for (idx, &d) in hom.iter().enumerate() {
        if d > td.k {
            return Err(schema(format!(
                "thin_distance matrix cell ({}, {}) = {d} exceeds K = {}",
                idx / n,
                idx % n,
                td.k
            )));
        }
    }
    let mut v = truncated_sum(td.k);
    if let Some(k) = doc.kfold {
        v = eta_from_symmetry(&v, k).map_err(LoadError::invalid("kfold"))?;
    }
    let a = FinEnrichedCategory::induced(&v, n, hom).map_err(LoadError::invalid("thin_distance"))?;
    Ok(LoadedInstance { v, enriched: vec![a] })
}

fn load_base(doc: &InstanceDoc) -> Result<FinCategory, LoadError> {
    let n = doc.objects.ok_or_else(|| schema("missing section `objects`"))?;
    let morphisms = doc.morphisms.as_ref().ok_or_else(|| schema("missing section `morphisms`"))?;
    let mut pairs = Vec::with_capacity(morphisms.len());
    for (pos, m) in morphisms.iter().enumerate() {
        if m.id != pos {
            return Err(schema(format!("morphism entry {pos} has id {}; ids must be 0, 1, 2, …", m.id)));
        }
        pairs.push((m.src, m.tgt));
    }
    match doc.compose.as_ref().ok_or_else(|| schema("missing section `compose`"))? {
        Table::Induced(_) => {
            let base = FinCategory::thin(n, &pairs).map_err(LoadError::invalid("morphisms"))?;
            if base.morphisms() != pairs.len() {
                return Err(schema("an induced composition table needs distinct (src, tgt) pairs"));
            }
            if let Some(ids) = &doc.identities {
                if ids.iter().enumerate().any(|(x, &i)| base.id(x) != i) || ids.len() != n {
                    return Err(schema("identities disagree with the (x, x) morphisms"));
                }
            }
            Ok(base)
        }
        Table::Rows(rows) => {
            let ids = doc.identities.as_ref().ok_or_else(|| schema("missing section `identities`"))?;
            let mut triples = Vec::with_capacity(rows.len());
            for (r, row) in rows.iter().enumerate() {
                match row.as_slice() {
                    &[g, f, h] => triples.push((g, f, h)),
                    _ => return Err(schema(format!("compose row {r} must be [g, f, g∘f]"))),
                }
            }
            FinCategory::new(n, &pairs, ids, &triples).map_err(LoadError::invalid("compose"))
        }
    }
}

fn load_explicit(doc: &InstanceDoc) -> Result<LoadedInstance, LoadError> {
    let base = load_base(doc)?;
    let (n, m) = (base.objects(), base.morphisms());
    let unit = doc.unit.ok_or_else(|| schema("missing section `unit`"))?;
    let tdocs = doc.tensors.as_ref().ok_or_else(|| schema("missing section `tensors`"))?;
    if tdocs.is_empty() {
        return Err(schema("`tensors` needs at least one product"));
    }
    let mut tensors = Vec::new();
    for (i, t) in tdocs.iter().enumerate() {
        let obj = square(&t.objects, n, &format!("tensor {} objects", i + 1))?;
        let mor = match &t.morphisms {
            None => Family::induced(),
            Some(tab) => family(tab, &format!("tensor {} morphisms", i + 1), 2, m * m, |k| {
                (k[0] < m && k[1] < m).then(|| k[0] * m + k[1])
            })?,
        };
        tensors.push(Tensor { obj, mor });
    }
    let mut alpha = Vec::new();
    for i in 0..tensors.len() {
        let fam = match doc.alpha.as_ref().and_then(|a| a.get(i)) {
            None => Family::induced(),
            Some(tab) => family(tab, &format!("alpha {}", i + 1), 3, n * n * n, |k| flat_checked(n, k))?,
        };
        alpha.push(fam);
    }
    let mut v = FinMonoidalInstance::new(base, unit, tensors, alpha).map_err(LoadError::invalid("tensors"))?;
    if let Some(tab) = &doc.c {
        let fam = family(tab, "c", 2, n * n, |k| flat_checked(n, k))?;
        v = v.with_symmetry(fam).map_err(LoadError::invalid("c"))?;
    }
    for e in doc.eta.iter().flatten() {
        let fam = family(&e.cells, &format!("eta ({}, {})", e.i, e.j), 4, n * n * n * n, |k| flat_checked(n, k))?;
        v = v.with_eta(e.i, e.j, fam).map_err(LoadError::invalid("eta"))?;
    }
    check_monoidal(&v).into_result().map_err(LoadError::invalid("monoidal structure"))?;
    if v.has_symmetry() {
        check_symmetry(&v)
            .and_then(|r| r.into_result())
            .map_err(LoadError::invalid("symmetry"))?;
    }
    if let Some(k) = doc.kfold {
        if doc.eta.is_some() {
            return Err(schema("give either `eta` tables or `kfold`, not both"));
        }
        v = eta_from_symmetry(&v, k).map_err(LoadError::invalid("kfold"))?;
    }
    let mut enriched = Vec::new();
    for (e, d) in doc.enriched.iter().flatten().enumerate() {
        let k = d.objects;
        let hom = square(&d.hom, k, &format!("enriched {e} hom"))?;
        let mm = family(&d.m, &format!("enriched {e} M"), 3, k * k * k, |x| flat_checked(k, x))?;
        let j = family(&d.j, &format!("enriched {e} j"), 1, k, |x| flat_checked(k, x))?;
        let a = FinEnrichedCategory::new(&v, k, hom, mm, j).map_err(LoadError::invalid(format!("enriched {e}")))?;
        enriched.push(a);
    }
    Ok(LoadedInstance { v, enriched })
}

/// Parses and validates a document. Category laws, functoriality of every
/// tensor, the strict unit, the associators and (if present) the symmetry
/// are checked; failures name the axiom and the offending cell.
pub fn load_instance(text: &str) -> Result<LoadedInstance, LoadError> {
    let doc: InstanceDoc = serde_json::from_str(text)?;
    match &doc.thin_distance {
        Some(td) => load_thin_distance(&doc, td),
        None => load_explicit(&doc),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use braidcat::fincat::{check_enriched, check_kfold};

    const Z2_SIGN: &str = r#"{
        "objects": 1,
        "morphisms": [{"id": 0, "src": 0, "tgt": 0}, {"id": 1, "src": 0, "tgt": 0}],
        "identities": [0],
        "compose": [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]],
        "tensors": [{"objects": [[0]], "morphisms": [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]]}],
        "unit": 0,
        "alpha": [[[0, 0, 0, 0]]],
        "c": [[0, 0, 0]],
        "kfold": 3
    }"#;

    #[test]
    fn explicit_group_instance_loads() {
        let l = load_instance(Z2_SIGN).unwrap();
        assert!(!l.v.base().is_thin());
        assert!(check_kfold(&l.v, 3).unwrap().passed());
    }

    #[test]
    fn corrupted_composition_cell_is_named() {
        let bad = Z2_SIGN.replace(r#""compose": [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]]"#, r#""compose": [[0, 0, 0], [0, 1, 1], [1, 0, 0], [1, 1, 0]]"#);
        let err = load_instance(&bad).unwrap_err();
        match err {
            LoadError::Invalid {
                source: FincatError::Axiom { axiom, tuple, .. },
                ..
            } => {
                assert_eq!(axiom, "category: identity laws");
                assert_eq!(tuple, [1]);
            }
            other => panic!("{other}"),
        }
    }

    #[test]
    fn thin_distance_expands() {
        let l = load_instance(r#"{"thin_distance": {"K": 10, "matrix": [[0, 3, 4], [2, 0, 1], [9, 9, 0]]}, "kfold": 2}"#)
            .unwrap();
        assert_eq!(l.v.base().objects(), 11);
        assert_eq!(l.enriched.len(), 1);
        assert!(check_enriched(&l.v, &l.enriched[0]).unwrap().passed());
        let bad = load_instance(r#"{"thin_distance": {"K": 10, "matrix": [[0, 11], [0, 0]]}}"#).unwrap_err();
        assert!(bad.to_string().contains("(0, 1)"));
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(load_instance("{"), Err(LoadError::Parse(_))));
        assert!(matches!(load_instance(r#"{"bogus": 1}"#), Err(LoadError::Parse(_))));
        assert!(matches!(load_instance(r#"{"objects": 1}"#), Err(LoadError::Schema(_))));
    }
}
