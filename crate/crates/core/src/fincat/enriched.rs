use alloc::format;
use alloc::vec::Vec;

use super::monoidal::FinMonoidalInstance;
use super::report::{scan_tuples, Report};
use super::{flat, Family, FincatError, MorId, ObjId};

/// Largest object count of an iterated product built by [`verify_theorem41`].
pub const MAX_PRODUCT_OBJECTS: usize = 160;

/// A category enriched over a finite monoidal instance, using `⊗₁`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinEnrichedCategory {
    base: u64,
    objects: usize,
    /// `𝒜(a, b)` at `a * objects + b`.
    hom: Vec<ObjId>,
    /// `M_{abc} : 𝒜(b, c) ⊗₁ 𝒜(a, b) → 𝒜(a, c)` at the flattened `(a, b, c)`.
    comp: Family,
    /// `j_a : I → 𝒜(a, a)`.
    unit: Family,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnrichedCell {
    Comp { a: usize, b: usize, c: usize },
    Unit { a: usize },
}

impl FinEnrichedCategory {
    pub fn new(
        v: &FinMonoidalInstance,
        objects: usize,
        hom: Vec<ObjId>,
        comp: Family,
        unit: Family,
    ) -> Result<Self, FincatError> {
        if hom.len() != objects * objects {
            return Err(FincatError::Invalid(format!(
                "hom table has {} cells for {objects} objects",
                hom.len()
            )));
        }
        if let Some(&index) = hom.iter().find(|&&x| x >= v.base().objects()) {
            return Err(FincatError::OutOfRange { what: "object", index });
        }
        for (fam, len) in [(&comp, objects * objects * objects), (&unit, objects)] {
            if let Family::Dense(cells) = fam {
                if cells.len() != len {
                    return Err(FincatError::Invalid(format!("table has {} cells, expected {len}", cells.len())));
                }
            }
        }
        Ok(FinEnrichedCategory {
            base: v.signature(),
            objects,
            hom,
            comp,
            unit,
        })
    }

    /// Composition and units are the unique morphisms of the right type.
    /// Needs a thin base.
    pub fn induced(v: &FinMonoidalInstance, objects: usize, hom: Vec<ObjId>) -> Result<Self, FincatError> {
        if !v.base().is_thin() {
            return Err(FincatError::Invalid("induced tables need a thin base".into()));
        }
        Self::new(v, objects, hom, Family::induced(), Family::induced())
    }

    /// A quasi-metric space over a truncated-sum instance, with
    /// `hom(a, b) = d[a][b]`.
    pub fn quasi_metric(v: &FinMonoidalInstance, d: &[Vec<usize>]) -> Result<Self, FincatError> {
        let n = d.len();
        if d.iter().any(|row| row.len() != n) {
            return Err(FincatError::Invalid("distance matrix is not square".into()));
        }
        Self::induced(v, n, d.iter().flatten().copied().collect())
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn hom(&self, a: usize, b: usize) -> ObjId {
        self.hom[a * self.objects + b]
    }

    pub fn comp(&self, v: &FinMonoidalInstance, a: usize, b: usize, c: usize) -> Option<MorId> {
        let s = v.t(1, self.hom(b, c), self.hom(a, b));
        v.base().resolve(&self.comp, flat(self.objects, &[a, b, c]), s, self.hom(a, c))
    }

    pub fn unit(&self, v: &FinMonoidalInstance, a: usize) -> Option<MorId> {
        v.base().resolve(&self.unit, a, v.unit(), self.hom(a, a))
    }

    pub fn get_cell(&self, v: &FinMonoidalInstance, cell: EnrichedCell) -> Option<MorId> {
        match cell {
            EnrichedCell::Comp { a, b, c } => self.comp(v, a, b, c),
            EnrichedCell::Unit { a } => self.unit(v, a),
        }
    }

    pub fn set_cell(&mut self, cell: EnrichedCell, value: MorId) -> Result<(), FincatError> {
        let n = self.objects;
        match cell {
            EnrichedCell::Comp { a, b, c } if a < n && b < n && c < n => self.comp.set(flat(n, &[a, b, c]), value),
            EnrichedCell::Unit { a } if a < n => self.unit.set(a, value),
            _ => return Err(FincatError::Invalid(format!("cell {cell:?} is out of range"))),
        }
        Ok(())
    }

    fn same_base(&self, v: &FinMonoidalInstance) -> Result<(), FincatError> {
        if self.base == v.signature() {
            Ok(())
        } else {
            Err(FincatError::BaseMismatch)
        }
    }
}

/// Typing of composition and units, then associativity and unit laws.
pub fn check_enriched(v: &FinMonoidalInstance, a: &FinEnrichedCategory) -> Result<Report, FincatError> {
    a.same_base(v)?;
    let b = v.base();
    let n = a.objects;
    let mut r = Report::new();
    let (c, f) = scan_tuples(n, 3, |q| {
        let s = v.t(1, a.hom(q[1], q[2]), a.hom(q[0], q[1]));
        b.typed(a.comp(v, q[0], q[1], q[2]), s, a.hom(q[0], q[2]))
            .map_err(|d| format!("composition cell: {d}"))
    });
    r.push("composition typing", c, false, f);
    let (c, f) = scan_tuples(n, 1, |q| {
        b.typed(a.unit(v, q[0]), v.unit(), a.hom(q[0], q[0]))
            .map_err(|d| format!("unit cell: {d}"))
    });
    r.push("unit typing", c, false, f);
    if b.is_thin() || !r.passed() {
        r.push("associativity", 0, true, None);
        r.push("unit laws", 0, true, None);
        return Ok(r);
    }
    let (c, f) = scan_tuples(n, 4, |q| {
        let [x, y, z, w] = [q[0], q[1], q[2], q[3]];
        let lhs = b.seq(&[v.tm(1, a.comp(v, y, z, w), v.id(a.hom(x, y))), a.comp(v, x, y, w)]);
        let rhs = b.seq(&[
            v.alpha(1, a.hom(z, w), a.hom(y, z), a.hom(x, y)),
            v.tm(1, v.id(a.hom(z, w)), a.comp(v, x, y, z)),
            a.comp(v, x, z, w),
        ]);
        b.same(lhs, rhs)
    });
    r.push("associativity", c, false, f);
    let (c, f) = scan_tuples(n, 2, |p| {
        let (x, y) = (p[0], p[1]);
        let one = v.id(a.hom(x, y));
        b.same(b.seq(&[v.tm(1, a.unit(v, y), one), a.comp(v, x, y, y)]), one)?;
        b.same(b.seq(&[v.tm(1, one, a.unit(v, x)), a.comp(v, x, x, y)]), one)
    });
    r.push("unit laws", c, false, f);
    Ok(r)
}

/// An enriched functor: an object map and components
/// `T_{ab} : 𝒜(a, b) → ℬ(Ta, Tb)` at `a * objects + b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinEnrichedFunctor {
    pub obj: Vec<usize>,
    pub hom: Family,
}

impl FinEnrichedFunctor {
    pub fn induced(obj: Vec<usize>) -> Self {
        FinEnrichedFunctor { obj, hom: Family::induced() }
    }

    pub fn map(&self, v: &FinMonoidalInstance, a: &FinEnrichedCategory, b: &FinEnrichedCategory, x: usize, y: usize) -> Option<MorId> {
        let (s, t) = (a.hom(x, y), b.hom(self.obj[x], self.obj[y]));
        v.base().resolve(&self.hom, x * a.objects + y, s, t)
    }
}

fn check_object_map(obj: &[usize], a: &FinEnrichedCategory, b: &FinEnrichedCategory) -> Result<(), FincatError> {
    if obj.len() != a.objects {
        return Err(FincatError::Invalid(format!(
            "object map has {} entries for {} objects",
            obj.len(),
            a.objects
        )));
    }
    match obj.iter().find(|&&x| x >= b.objects) {
        Some(&index) => Err(FincatError::OutOfRange { what: "object", index }),
        None => Ok(()),
    }
}

/// Typing of the components, then `T_{ac} ∘ M = M ∘ (T_{bc} ⊗₁ T_{ab})` and
/// `T_{aa} ∘ j_a = j_{Ta}`.
pub fn check_functor(
    v: &FinMonoidalInstance,
    a: &FinEnrichedCategory,
    b: &FinEnrichedCategory,
    t: &FinEnrichedFunctor,
) -> Result<Report, FincatError> {
    a.same_base(v)?;
    b.same_base(v)?;
    check_object_map(&t.obj, a, b)?;
    let base = v.base();
    let mut r = Report::new();
    let (c, f) = scan_tuples(a.objects, 2, |p| {
        base.typed(t.map(v, a, b, p[0], p[1]), a.hom(p[0], p[1]), b.hom(t.obj[p[0]], t.obj[p[1]]))
            .map_err(|d| format!("functor cell: {d}"))
    });
    r.push("functor typing", c, false, f);
    if base.is_thin() || !r.passed() {
        r.push("functor composition", 0, true, None);
        r.push("functor units", 0, true, None);
        return Ok(r);
    }
    let o = &t.obj;
    let (c, f) = scan_tuples(a.objects, 3, |q| {
        let [x, y, z] = [q[0], q[1], q[2]];
        let lhs = base.seq(&[a.comp(v, x, y, z), t.map(v, a, b, x, z)]);
        let rhs = base.seq(&[
            v.tm(1, t.map(v, a, b, y, z), t.map(v, a, b, x, y)),
            b.comp(v, o[x], o[y], o[z]),
        ]);
        base.same(lhs, rhs)
    });
    r.push("functor composition", c, false, f);
    let (c, f) = scan_tuples(a.objects, 1, |q| {
        base.same(base.seq(&[a.unit(v, q[0]), t.map(v, a, b, q[0], q[0])]), b.unit(v, o[q[0]]))
    });
    r.push("functor units", c, false, f);
    Ok(r)
}

/// Components `α_a : I → ℬ(Ta, Sa)`, indexed by `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinEnrichedNat {
    pub comp: Family,
}

/// Typing, then `M ∘ (α_b ⊗₁ T_{ab}) = M ∘ (S_{ab} ⊗₁ α_a)`.
pub fn check_nat(
    v: &FinMonoidalInstance,
    a: &FinEnrichedCategory,
    b: &FinEnrichedCategory,
    t: &FinEnrichedFunctor,
    s: &FinEnrichedFunctor,
    alpha: &FinEnrichedNat,
) -> Result<Report, FincatError> {
    a.same_base(v)?;
    b.same_base(v)?;
    check_object_map(&t.obj, a, b)?;
    check_object_map(&s.obj, a, b)?;
    let base = v.base();
    let comp = |x: usize| base.resolve(&alpha.comp, x, v.unit(), b.hom(t.obj[x], s.obj[x]));
    let mut r = Report::new();
    let (c, f) = scan_tuples(a.objects, 1, |q| {
        base.typed(comp(q[0]), v.unit(), b.hom(t.obj[q[0]], s.obj[q[0]]))
            .map_err(|d| format!("component cell: {d}"))
    });
    r.push("component typing", c, false, f);
    if base.is_thin() || !r.passed() {
        r.push("naturality", 0, true, None);
        return Ok(r);
    }
    let (c, f) = scan_tuples(a.objects, 2, |p| {
        let (x, y) = (p[0], p[1]);
        let (tx, ty, sx, sy) = (t.obj[x], t.obj[y], s.obj[x], s.obj[y]);
        let lhs = base.seq(&[v.tm(1, comp(y), t.map(v, a, b, x, y)), b.comp(v, tx, ty, sy)]);
        let rhs = base.seq(&[v.tm(1, s.map(v, a, b, x, y), comp(x)), b.comp(v, tx, sx, sy)]);
        base.same(lhs, rhs)
    });
    r.push("naturality", c, false, f);
    Ok(r)
}

/// The product `𝒜 ⊗_i ℬ`: objects `(a, b)` at `a * |ℬ| + b`,
/// `hom = 𝒜(a, a') ⊗_{i+1} ℬ(b, b')`, composition
/// `(M ⊗_{i+1} M) ∘ η^{1, i+1}` and units `j ⊗_{i+1} j`.
pub fn product_enriched(
    v: &FinMonoidalInstance,
    a: &FinEnrichedCategory,
    b: &FinEnrichedCategory,
    i: usize,
) -> Result<FinEnrichedCategory, FincatError> {
    a.same_base(v)?;
    b.same_base(v)?;
    if i == 0 {
        return Err(FincatError::Invalid("product index starts at 1".into()));
    }
    if v.products() < i + 1 {
        return Err(FincatError::TooFewProducts {
            needed: i + 1,
            available: v.products(),
        });
    }
    if !v.has_eta(1, i + 1) {
        return Err(FincatError::Missing(format!("interchange (1, {})", i + 1)));
    }
    let (na, nb) = (a.objects, b.objects);
    let n = na * nb;
    let split = |x: usize| (x / nb, x % nb);
    let mut hom = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let ((p, q), (p2, q2)) = (split(x), split(y));
            hom.push(v.t(i + 1, a.hom(p, p2), b.hom(q, q2)));
        }
    }
    let mut comp = Family::dense(n * n * n);
    for x in 0..n {
        let (p, q) = split(x);
        for y in 0..n {
            let (p1, q1) = split(y);
            for z in 0..n {
                let (p2, q2) = split(z);
                let eta = v.eta(1, i + 1, [a.hom(p1, p2), b.hom(q1, q2), a.hom(p, p1), b.hom(q, q1)]);
                let m = v.tm(i + 1, a.comp(v, p, p1, p2), b.comp(v, q, q1, q2));
                if let Some(cell) = v.base().seq(&[eta, m]) {
                    comp.set(flat(n, &[x, y, z]), cell);
                }
            }
        }
    }
    let mut unit = Family::dense(n);
    for x in 0..n {
        let (p, q) = split(x);
        if let Some(cell) = v.tm(i + 1, a.unit(v, p), b.unit(v, q)) {
            unit.set(x, cell);
        }
    }
    FinEnrichedCategory::new(v, n, hom, comp, unit)
}

/// One object with `hom = I` and identity composition and unit.
pub fn unit_enriched(v: &FinMonoidalInstance) -> FinEnrichedCategory {
    let one = v.base().id(v.unit());
    FinEnrichedCategory {
        base: v.signature(),
        objects: 1,
        hom: alloc::vec![v.unit()],
        comp: Family::Dense(alloc::vec![Some(one)]),
        unit: Family::Dense(alloc::vec![Some(one)]),
    }
}

/// Equal hom objects, composition and units under the identity relabelling.
pub fn enriched_tables_equal(v: &FinMonoidalInstance, a: &FinEnrichedCategory, b: &FinEnrichedCategory) -> bool {
    let n = a.objects;
    n == b.objects
        && a.hom == b.hom
        && (0..n).all(|x| a.unit(v, x) == b.unit(v, x))
        && scan_tuples(n, 3, |q| {
            if a.comp(v, q[0], q[1], q[2]) == b.comp(v, q[0], q[1], q[2]) {
                Ok(())
            } else {
                Err(alloc::string::String::new())
            }
        })
        .1
        .is_none()
}

fn too_big(n: usize) -> Result<(), FincatError> {
    if n > MAX_PRODUCT_OBJECTS {
        return Err(FincatError::Invalid(format!(
            "iterated product has {n} objects, limit is {MAX_PRODUCT_OBJECTS}"
        )));
    }
    Ok(())
}

/// Checks, for the products `⊗_i` of enriched categories with
/// `1 ≤ i < k`, that the unit category is a two-sided unit, that binary
/// products are enriched categories, that the associator `α⁽¹⁾` built from
/// `α^{i+1}` is an enriched functor and, for `i < j < k`, that the
/// interchange `η⁽¹⁾` built from `η^{i+1, j+1}` is an enriched functor.
///
/// Samples are taken in consecutive cyclic windows: triples starting at
/// every third sample and quadruples at every fourth, so every sample is
/// used. The instance is assumed to pass [`check_kfold`](super::check_kfold).
pub fn verify_theorem41(
    v: &FinMonoidalInstance,
    k: usize,
    samples: &[FinEnrichedCategory],
) -> Result<Report, FincatError> {
    if k < 2 {
        return Err(FincatError::Invalid("needs k ≥ 2".into()));
    }
    if k > v.products() {
        return Err(FincatError::TooFewProducts {
            needed: k,
            available: v.products(),
        });
    }
    if samples.is_empty() {
        return Err(FincatError::Invalid("no sample categories".into()));
    }
    for s in samples {
        s.same_base(v)?;
    }
    let len = samples.len();
    let pick = |t: usize| &samples[t % len];
    let unit = unit_enriched(v);
    let mut r = Report::new();
    for i in 1..k {
        let mut cases = 0;
        let mut fail = None;
        for (t, s) in samples.iter().enumerate() {
            cases += 1;
            let left = product_enriched(v, &unit, s, i)?;
            let right = product_enriched(v, s, &unit, i)?;
            if !enriched_tables_equal(v, &left, s) || !enriched_tables_equal(v, &right, s) {
                fail = Some(super::Failure {
                    tuple: alloc::vec![t],
                    detail: "unit category is not a two-sided unit".into(),
                });
                break;
            }
        }
        r.push(format!("unit identity ⊗{i}"), cases, false, fail);

        for t in (0..len).step_by(3) {
            let (a, b, c) = (pick(t), pick(t + 1), pick(t + 2));
            too_big(a.objects * b.objects * c.objects)?;
            let ab = product_enriched(v, a, b, i)?;
            r.absorb(&format!("product ⊗{i} window {t}"), check_enriched(v, &ab)?);
            let src = product_enriched(v, &ab, c, i)?;
            let tgt = product_enriched(v, a, &product_enriched(v, b, c, i)?, i)?;
            let (nb, nc) = (b.objects, c.objects);
            let n = src.objects;
            let split = |x: usize| (x / (nb * nc), (x / nc) % nb, x % nc);
            let mut hom = Family::dense(n * n);
            for x in 0..n {
                for y in 0..n {
                    let ((p, q, s), (p2, q2, s2)) = (split(x), split(y));
                    if let Some(m) = v.alpha(i + 1, a.hom(p, p2), b.hom(q, q2), c.hom(s, s2)) {
                        hom.set(x * n + y, m);
                    }
                }
            }
            let functor = FinEnrichedFunctor { obj: (0..n).collect(), hom };
            r.absorb(
                &format!("α(1) associator functor ⊗{i} window {t}"),
                check_functor(v, &src, &tgt, &functor)?,
            );
        }
    }
    for i in 1..k {
        for j in i + 1..k {
            for t in (0..len).step_by(4) {
                let (a, b, c, d) = (pick(t), pick(t + 1), pick(t + 2), pick(t + 3));
                too_big(a.objects * b.objects * c.objects * d.objects)?;
                let src = product_enriched(v, &product_enriched(v, a, b, j)?, &product_enriched(v, c, d, j)?, i)?;
                let tgt = product_enriched(v, &product_enriched(v, a, c, i)?, &product_enriched(v, b, d, i)?, j)?;
                let (nb, nc, nd) = (b.objects, c.objects, d.objects);
                let split = |x: usize| (x / (nb * nc * nd), (x / (nc * nd)) % nb, (x / nd) % nc, x % nd);
                let n = src.objects;
                let mut obj = Vec::with_capacity(n);
                for x in 0..n {
                    let (p, q, s, u) = split(x);
                    obj.push(((p * nc + s) * nb + q) * nd + u);
                }
                let mut hom = Family::dense(n * n);
                for x in 0..n {
                    for y in 0..n {
                        let ((p, q, s, u), (p2, q2, s2, u2)) = (split(x), split(y));
                        let q4 = [a.hom(p, p2), b.hom(q, q2), c.hom(s, s2), d.hom(u, u2)];
                        if let Some(m) = v.eta(i + 1, j + 1, q4) {
                            hom.set(x * n + y, m);
                        }
                    }
                }
                let functor = FinEnrichedFunctor { obj, hom };
                r.absorb(
                    &format!("η(1) interchange functor (giant hexagon) ⊗{i} ⊗{j} window {t}"),
                    check_functor(v, &src, &tgt, &functor)?,
                );
            }
        }
    }
    Ok(r)
}
