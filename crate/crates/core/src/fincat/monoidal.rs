use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::category::FinCategory;
use super::report::{scan_tuples, Report};
use super::{flat, Family, FincatError, MorId, ObjId};

/// Largest object count for the exhaustive eight-object hexagon over a
/// non-thin base.
pub const MAX_HEXAGON_OBJECTS: usize = 6;

/// One tensor product: a table on objects and a family on morphism pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    /// `x ⊗ y` at `x * objects + y`.
    pub obj: Vec<ObjId>,
    /// `f ⊗ g` at `f * morphisms + g`.
    pub mor: Family,
}

impl Tensor {
    /// Object table with the morphism part induced (thin bases only).
    pub fn induced(obj: Vec<ObjId>) -> Self {
        Tensor { obj, mor: Family::induced() }
    }
}

/// A table cell that can be read or overwritten, for mutation testing.
/// Product indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    Compose { g: MorId, f: MorId },
    Tensor { i: usize, f: MorId, g: MorId },
    Alpha { i: usize, u: ObjId, v: ObjId, w: ObjId },
    Symmetry { x: ObjId, y: ObjId },
    Eta { i: usize, j: usize, a: ObjId, b: ObjId, c: ObjId, d: ObjId },
}

/// A finite category with `k` tensor products sharing a strict unit,
/// associators, an optional symmetry for `⊗₁` and interchanges `η^{ij}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinMonoidalInstance {
    base: FinCategory,
    unit: ObjId,
    tensors: Vec<Tensor>,
    alpha: Vec<Family>,
    sym: Option<Family>,
    eta: BTreeMap<(usize, usize), Family>,
}

fn family_len(fam: &Family, len: usize, what: &str) -> Result<(), FincatError> {
    match fam {
        Family::Dense(v) if v.len() != len => Err(FincatError::Invalid(format!(
            "{what} table has {} cells, expected {len}",
            v.len()
        ))),
        Family::Dense(_) => Ok(()),
        Family::Induced(o) => match o.keys().next_back() {
            Some(&k) if k >= len => Err(FincatError::OutOfRange { what: "table index", index: k }),
            _ => Ok(()),
        },
    }
}

fn check_mors(fam: &Family, m: usize) -> Result<(), FincatError> {
    let bad = match fam {
        Family::Dense(v) => v.iter().flatten().copied().find(|&x| x >= m),
        Family::Induced(o) => o.values().copied().find(|&x| x >= m),
    };
    match bad {
        Some(index) => Err(FincatError::OutOfRange { what: "morphism", index }),
        None => Ok(()),
    }
}

impl FinMonoidalInstance {
    /// Tensors and associators are listed for `⊗₁, ⊗₂, …`.
    pub fn new(base: FinCategory, unit: ObjId, tensors: Vec<Tensor>, alpha: Vec<Family>) -> Result<Self, FincatError> {
        let (n, m) = (base.objects(), base.morphisms());
        if unit >= n {
            return Err(FincatError::OutOfRange { what: "object", index: unit });
        }
        if tensors.is_empty() || tensors.len() != alpha.len() {
            return Err(FincatError::Invalid(format!(
                "{} tensors with {} associator tables",
                tensors.len(),
                alpha.len()
            )));
        }
        for t in &tensors {
            if t.obj.len() != n * n {
                return Err(FincatError::Invalid(format!(
                    "tensor object table has {} cells, expected {}",
                    t.obj.len(),
                    n * n
                )));
            }
            if let Some(&index) = t.obj.iter().find(|&&x| x >= n) {
                return Err(FincatError::OutOfRange { what: "object", index });
            }
            family_len(&t.mor, m * m, "tensor morphism")?;
            check_mors(&t.mor, m)?;
        }
        for a in &alpha {
            family_len(a, n * n * n, "associator")?;
            check_mors(a, m)?;
        }
        Ok(FinMonoidalInstance {
            base,
            unit,
            tensors,
            alpha,
            sym: None,
            eta: BTreeMap::new(),
        })
    }

    /// Adds a symmetry for `⊗₁`, indexed by `x * objects + y`.
    pub fn with_symmetry(mut self, c: Family) -> Result<Self, FincatError> {
        let n = self.base.objects();
        family_len(&c, n * n, "symmetry")?;
        check_mors(&c, self.base.morphisms())?;
        self.sym = Some(c);
        Ok(self)
    }

    /// Adds `η^{ij}` for `1 ≤ i < j ≤ k`, indexed by the flattened `(A, B, C, D)`.
    pub fn with_eta(mut self, i: usize, j: usize, eta: Family) -> Result<Self, FincatError> {
        if !(1 <= i && i < j && j <= self.products()) {
            return Err(FincatError::Invalid(format!(
                "interchange ({i}, {j}) for {} products",
                self.products()
            )));
        }
        let n = self.base.objects();
        family_len(&eta, n * n * n * n, "interchange")?;
        check_mors(&eta, self.base.morphisms())?;
        self.eta.insert((i, j), eta);
        Ok(self)
    }

    pub fn base(&self) -> &FinCategory {
        &self.base
    }

    pub fn unit(&self) -> ObjId {
        self.unit
    }

    pub fn products(&self) -> usize {
        self.tensors.len()
    }

    pub fn has_symmetry(&self) -> bool {
        self.sym.is_some()
    }

    pub fn has_eta(&self, i: usize, j: usize) -> bool {
        self.eta.contains_key(&(i, j))
    }

    /// `x ⊗_i y`.
    pub fn t(&self, i: usize, x: ObjId, y: ObjId) -> ObjId {
        self.tensors[i - 1].obj[x * self.base.objects() + y]
    }

    /// `f ⊗_i g`, propagating undefined inputs.
    pub fn tm(&self, i: usize, f: Option<MorId>, g: Option<MorId>) -> Option<MorId> {
        let (f, g) = (f?, g?);
        let b = &self.base;
        let s = self.t(i, b.src(f), b.src(g));
        let t = self.t(i, b.tgt(f), b.tgt(g));
        b.resolve(&self.tensors[i - 1].mor, f * b.morphisms() + g, s, t)
    }

    pub fn id(&self, x: ObjId) -> Option<MorId> {
        Some(self.base.id(x))
    }

    /// `α^i_{UVW} : (U ⊗_i V) ⊗_i W → U ⊗_i (V ⊗_i W)`.
    pub fn alpha(&self, i: usize, u: ObjId, v: ObjId, w: ObjId) -> Option<MorId> {
        let s = self.t(i, self.t(i, u, v), w);
        let t = self.t(i, u, self.t(i, v, w));
        self.base.resolve(&self.alpha[i - 1], flat(self.base.objects(), &[u, v, w]), s, t)
    }

    pub fn alpha_inv(&self, i: usize, u: ObjId, v: ObjId, w: ObjId) -> Option<MorId> {
        self.base.inverse(self.alpha(i, u, v, w)?)
    }

    /// `c_{XY} : X ⊗₁ Y → Y ⊗₁ X`.
    pub fn sym(&self, x: ObjId, y: ObjId) -> Option<MorId> {
        let c = self.sym.as_ref()?;
        self.base.resolve(c, x * self.base.objects() + y, self.t(1, x, y), self.t(1, y, x))
    }

    /// Source and target of `η^{ij}_{ABCD}`.
    pub fn eta_type(&self, i: usize, j: usize, [a, b, c, d]: [ObjId; 4]) -> (ObjId, ObjId) {
        (
            self.t(i, self.t(j, a, b), self.t(j, c, d)),
            self.t(j, self.t(i, a, c), self.t(i, b, d)),
        )
    }

    /// `η^{ij}_{ABCD} : (A ⊗_j B) ⊗_i (C ⊗_j D) → (A ⊗_i C) ⊗_j (B ⊗_i D)`.
    pub fn eta(&self, i: usize, j: usize, q: [ObjId; 4]) -> Option<MorId> {
        let fam = self.eta.get(&(i, j))?;
        let (s, t) = self.eta_type(i, j, q);
        self.base.resolve(fam, flat(self.base.objects(), &q), s, t)
    }

    /// Current value of a cell, with induced cells resolved.
    pub fn get_cell(&self, cell: Cell) -> Option<MorId> {
        match cell {
            Cell::Compose { g, f } => self.base.compose_cell(g, f),
            Cell::Tensor { i, f, g } => self.tm(i, Some(f), Some(g)),
            Cell::Alpha { i, u, v, w } => self.alpha(i, u, v, w),
            Cell::Symmetry { x, y } => self.sym(x, y),
            Cell::Eta { i, j, a, b, c, d } => self.eta(i, j, [a, b, c, d]),
        }
    }

    /// Overwrites one table cell.
    pub fn set_cell(&mut self, cell: Cell, value: MorId) -> Result<(), FincatError> {
        let (n, m) = (self.base.objects(), self.base.morphisms());
        if value >= m {
            return Err(FincatError::OutOfRange { what: "morphism", index: value });
        }
        let in_range = |xs: &[usize], lim: usize| xs.iter().all(|&x| x < lim);
        let prod_ok = |i: usize| (1..=self.tensors.len()).contains(&i);
        match cell {
            Cell::Compose { g, f } if in_range(&[g, f], m) => self.base.set_compose(g, f, value),
            Cell::Tensor { i, f, g } if prod_ok(i) && in_range(&[f, g], m) => {
                self.tensors[i - 1].mor.set(f * m + g, value)
            }
            Cell::Alpha { i, u, v, w } if prod_ok(i) && in_range(&[u, v, w], n) => {
                self.alpha[i - 1].set(flat(n, &[u, v, w]), value)
            }
            Cell::Symmetry { x, y } if in_range(&[x, y], n) => match &mut self.sym {
                Some(c) => c.set(x * n + y, value),
                None => return Err(FincatError::Missing("symmetry".into())),
            },
            Cell::Eta { i, j, a, b, c, d } if in_range(&[a, b, c, d], n) => match self.eta.get_mut(&(i, j)) {
                Some(e) => e.set(flat(n, &[a, b, c, d]), value),
                None => return Err(FincatError::Missing(format!("interchange ({i}, {j})"))),
            },
            _ => return Err(FincatError::Invalid(format!("cell {cell:?} is out of range"))),
        }
        Ok(())
    }

    /// Fingerprint of the underlying category, unit and `⊗₁` on objects.
    /// Enriched categories record it so products over different bases can
    /// be rejected.
    pub fn signature(&self) -> u64 {
        let b = &self.base;
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut eat = |x: usize| {
            for byte in (x as u64).to_le_bytes() {
                h ^= byte as u64;
                h = h.wrapping_mul(0x0100_0000_01b3);
            }
        };
        eat(b.objects());
        eat(b.morphisms());
        eat(self.unit);
        for f in 0..b.morphisms() {
            eat(b.src(f));
            eat(b.tgt(f));
        }
        for &x in &self.tensors[0].obj {
            eat(x);
        }
        h
    }
}

fn thin_skip(r: &mut Report, names: &[String]) {
    for name in names {
        r.push(name.clone(), 0, true, None);
    }
}

/// Category laws, then for every product: strict unit, functoriality of
/// the tensor, and the associator's typing, invertibility, unit
/// normalisation, naturality and pentagon.
pub fn check_monoidal(v: &FinMonoidalInstance) -> Report {
    let mut r = Report::new();
    r.absorb("category", v.base.validate());
    if !r.passed() {
        return r;
    }
    let b = &v.base;
    let (n, m, e) = (b.objects(), b.morphisms(), v.unit);
    let thin = b.is_thin();
    for i in 1..=v.products() {
        let (c, f) = scan_tuples(n, 1, |x| {
            let x = x[0];
            if v.t(i, x, e) != x || v.t(i, e, x) != x {
                return Err(format!("unit is not strict at object {x}"));
            }
            Ok(())
        });
        r.push(format!("unit objects ⊗{i}"), c, false, f);

        let (c, f) = scan_tuples(m, 2, |p| {
            let s = v.t(i, b.src(p[0]), b.src(p[1]));
            let t = v.t(i, b.tgt(p[0]), b.tgt(p[1]));
            b.typed(v.tm(i, Some(p[0]), Some(p[1])), s, t).map_err(|d| format!("tensor cell: {d}"))
        });
        r.push(format!("tensor typing ⊗{i}"), c, false, f);

        let (c, f) = scan_tuples(n, 3, |q| {
            let (s, t) = (v.t(i, v.t(i, q[0], q[1]), q[2]), v.t(i, q[0], v.t(i, q[1], q[2])));
            let a = v.alpha(i, q[0], q[1], q[2]);
            b.typed(a, s, t).map_err(|d| format!("associator cell: {d}"))?;
            match b.inverse(a.expect("typed")) {
                Some(_) => Ok(()),
                None => Err(String::from("associator is not invertible")),
            }
        });
        r.push(format!("associator typing ⊗{i}"), c, false, f);

        let names = [
            format!("unit morphisms ⊗{i}"),
            format!("tensor identities ⊗{i}"),
            format!("tensor interchange of composition ⊗{i}"),
            format!("associator unit normalisation ⊗{i}"),
            format!("associator naturality ⊗{i}"),
            format!("pentagon ⊗{i}"),
        ];
        if thin || !r.passed() {
            thin_skip(&mut r, &names);
            continue;
        }
        let (c, f) = scan_tuples(m, 1, |f| {
            let f = Some(f[0]);
            b.same(v.tm(i, f, v.id(e)), f)?;
            b.same(v.tm(i, v.id(e), f), f)
        });
        r.push(names[0].clone(), c, false, f);

        let (c, f) = scan_tuples(n, 2, |p| b.same(v.tm(i, v.id(p[0]), v.id(p[1])), v.id(v.t(i, p[0], p[1]))));
        r.push(names[1].clone(), c, false, f);

        let (c, f) = scan_tuples(m, 4, |q| {
            let (f1, f2, g1, g2) = (q[0], q[1], q[2], q[3]);
            if b.tgt(f1) != b.src(f2) || b.tgt(g1) != b.src(g2) {
                return Ok(());
            }
            let lhs = v.tm(i, b.compose(f2, f1), b.compose(g2, g1));
            let rhs = b.seq(&[v.tm(i, Some(f1), Some(g1)), v.tm(i, Some(f2), Some(g2))]);
            b.same(lhs, rhs)
        });
        r.push(names[2].clone(), c, false, f);

        let (c, f) = scan_tuples(n, 3, |q| {
            if q.contains(&e) {
                let x = v.t(i, v.t(i, q[0], q[1]), q[2]);
                b.same(v.alpha(i, q[0], q[1], q[2]), v.id(x))?;
            }
            Ok(())
        });
        r.push(names[3].clone(), c, false, f);

        let (c, f) = scan_tuples(m, 3, |q| {
            let (f, g, h) = (Some(q[0]), Some(q[1]), Some(q[2]));
            let a_src = v.alpha(i, b.src(q[0]), b.src(q[1]), b.src(q[2]));
            let a_tgt = v.alpha(i, b.tgt(q[0]), b.tgt(q[1]), b.tgt(q[2]));
            let lhs = b.seq(&[v.tm(i, v.tm(i, f, g), h), a_tgt]);
            let rhs = b.seq(&[a_src, v.tm(i, f, v.tm(i, g, h))]);
            b.same(lhs, rhs)
        });
        r.push(names[4].clone(), c, false, f);

        let (c, f) = scan_tuples(n, 4, |q| {
            let (u, vv, w, x) = (q[0], q[1], q[2], q[3]);
            let lhs = b.seq(&[v.alpha(i, v.t(i, u, vv), w, x), v.alpha(i, u, vv, v.t(i, w, x))]);
            let rhs = b.seq(&[
                v.tm(i, v.alpha(i, u, vv, w), v.id(x)),
                v.alpha(i, u, v.t(i, vv, w), x),
                v.tm(i, v.id(u), v.alpha(i, vv, w, x)),
            ]);
            b.same(lhs, rhs)
        });
        r.push(names[5].clone(), c, false, f);
    }
    r
}

/// Typing, naturality, involutivity and the hexagon for the symmetry of `⊗₁`.
pub fn check_symmetry(v: &FinMonoidalInstance) -> Result<Report, FincatError> {
    if !v.has_symmetry() {
        return Err(FincatError::Missing("symmetry".into()));
    }
    let b = &v.base;
    let (n, m) = (b.objects(), b.morphisms());
    let mut r = Report::new();
    let (c, f) = scan_tuples(n, 2, |p| {
        b.typed(v.sym(p[0], p[1]), v.t(1, p[0], p[1]), v.t(1, p[1], p[0]))
            .map_err(|d| format!("symmetry cell: {d}"))
    });
    r.push("symmetry typing", c, false, f);
    let names = [
        String::from("symmetry naturality"),
        String::from("symmetry involutive"),
        String::from("hexagon"),
    ];
    if b.is_thin() || !r.passed() {
        thin_skip(&mut r, &names);
        return Ok(r);
    }
    let (c, f) = scan_tuples(m, 2, |p| {
        let (f, g) = (Some(p[0]), Some(p[1]));
        let lhs = b.seq(&[v.tm(1, f, g), v.sym(b.tgt(p[0]), b.tgt(p[1]))]);
        let rhs = b.seq(&[v.sym(b.src(p[0]), b.src(p[1])), v.tm(1, g, f)]);
        b.same(lhs, rhs)
    });
    r.push(names[0].clone(), c, false, f);
    let (c, f) = scan_tuples(n, 2, |p| {
        b.same(b.seq(&[v.sym(p[0], p[1]), v.sym(p[1], p[0])]), v.id(v.t(1, p[0], p[1])))
    });
    r.push(names[1].clone(), c, false, f);
    let (c, f) = scan_tuples(n, 3, |q| {
        let (x, y, z) = (q[0], q[1], q[2]);
        let lhs = b.seq(&[v.alpha(1, x, y, z), v.sym(x, v.t(1, y, z)), v.alpha(1, y, z, x)]);
        let rhs = b.seq(&[
            v.tm(1, v.sym(x, y), v.id(z)),
            v.alpha(1, y, x, z),
            v.tm(1, v.id(y), v.sym(x, z)),
        ]);
        b.same(lhs, rhs)
    });
    r.push(names[2].clone(), c, false, f);
    Ok(r)
}

/// The `k`-fold instance with every product equal to `⊗₁` and
/// `η_{ABCD} = α⁻¹ ∘ (1 ⊗ α) ∘ (1 ⊗ (c_{BC} ⊗ 1)) ∘ (1 ⊗ α⁻¹) ∘ α`.
/// The input must pass [`check_monoidal`] and [`check_symmetry`].
pub fn eta_from_symmetry(v: &FinMonoidalInstance, k: usize) -> Result<FinMonoidalInstance, FincatError> {
    if k == 0 {
        return Err(FincatError::Invalid("k must be at least 1".into()));
    }
    check_monoidal(v).into_result()?;
    check_symmetry(v)?.into_result()?;
    let b = &v.base;
    let n = b.objects();
    let mut out = v.clone();
    out.eta.clear();
    out.tensors = alloc::vec![v.tensors[0].clone(); k];
    out.alpha = alloc::vec![v.alpha[0].clone(); k];
    let eta = if b.is_thin() {
        Family::induced()
    } else {
        let mut fam = Family::dense(n * n * n * n);
        let (_, fail) = scan_tuples(n, 4, |q| {
            let (a, bb, c, d) = (q[0], q[1], q[2], q[3]);
            let e = b.seq(&[
                v.alpha(1, a, bb, v.t(1, c, d)),
                v.tm(1, v.id(a), v.alpha_inv(1, bb, c, d)),
                v.tm(1, v.id(a), v.tm(1, v.sym(bb, c), v.id(d))),
                v.tm(1, v.id(a), v.alpha(1, c, bb, d)),
                v.alpha_inv(1, a, c, v.t(1, bb, d)),
            ]);
            match e {
                Some(e) => {
                    fam.set(flat(n, q), e);
                    Ok(())
                }
                None => Err(String::from("interchange composite is undefined")),
            }
        });
        if let Some(f) = fail {
            return Err(FincatError::Axiom {
                axiom: "interchange from symmetry".into(),
                tuple: f.tuple,
                detail: f.detail,
            });
        }
        fam
    };
    for i in 1..=k {
        for j in i + 1..=k {
            out.eta.insert((i, j), eta.clone());
        }
    }
    Ok(out)
}

/// Conditions for a `k`-fold monoidal instance: typing and naturality of
/// every `η^{ij}`, the unit conditions (a) and (b), the associativity
/// conditions (c) and (d) and, for `i < j < l`, the hexagon (e).
pub fn check_kfold(v: &FinMonoidalInstance, k: usize) -> Result<Report, FincatError> {
    if k > v.products() {
        return Err(FincatError::TooFewProducts {
            needed: k,
            available: v.products(),
        });
    }
    for i in 1..=k {
        for j in i + 1..=k {
            if !v.has_eta(i, j) {
                return Err(FincatError::Missing(format!("interchange ({i}, {j})")));
            }
        }
    }
    let b = &v.base;
    let (n, m, e) = (b.objects(), b.morphisms(), v.unit);
    let thin = b.is_thin();
    if !thin && k >= 3 && n > MAX_HEXAGON_OBJECTS {
        return Err(FincatError::Invalid(format!(
            "{n} objects exceed the limit of {MAX_HEXAGON_OBJECTS} for the exhaustive hexagon"
        )));
    }
    let mut r = check_monoidal(v);
    if !r.passed() {
        return Ok(r);
    }
    let mut mistyped = false;
    for i in 1..=k {
        for j in i + 1..=k {
            let (c, f) = scan_tuples(n, 4, |q| {
                let q = [q[0], q[1], q[2], q[3]];
                let (s, t) = v.eta_type(i, j, q);
                b.typed(v.eta(i, j, q), s, t).map_err(|d| format!("interchange cell: {d}"))
            });
            mistyped |= f.is_some();
            let skip = thin || f.is_some();
            r.push(format!("interchange typing η{i}{j}"), c, false, f);
            let names = [
                format!("interchange naturality η{i}{j}"),
                format!("(a) external units η{i}{j}"),
                format!("(b) internal units η{i}{j}"),
                format!("(c) associativity of ⊗{i} η{i}{j}"),
                format!("(d) associativity of ⊗{j} η{i}{j}"),
            ];
            if skip {
                thin_skip(&mut r, &names);
                continue;
            }
            let (c, f) = scan_tuples(m, 4, |q| {
                let [f, g, h, l] = [Some(q[0]), Some(q[1]), Some(q[2]), Some(q[3])];
                let src = [b.src(q[0]), b.src(q[1]), b.src(q[2]), b.src(q[3])];
                let tgt = [b.tgt(q[0]), b.tgt(q[1]), b.tgt(q[2]), b.tgt(q[3])];
                let lhs = b.seq(&[v.tm(i, v.tm(j, f, g), v.tm(j, h, l)), v.eta(i, j, tgt)]);
                let rhs = b.seq(&[v.eta(i, j, src), v.tm(j, v.tm(i, f, h), v.tm(i, g, l))]);
                b.same(lhs, rhs)
            });
            r.push(names[0].clone(), c, false, f);

            let (c, f) = scan_tuples(n, 2, |p| {
                let (a, bb) = (p[0], p[1]);
                let one = v.id(v.t(j, a, bb));
                b.same(v.eta(i, j, [a, bb, e, e]), one)?;
                b.same(v.eta(i, j, [e, e, a, bb]), one)
            });
            r.push(names[1].clone(), c, false, f);

            let (c, f) = scan_tuples(n, 2, |p| {
                let (a, bb) = (p[0], p[1]);
                let one = v.id(v.t(i, a, bb));
                b.same(v.eta(i, j, [a, e, bb, e]), one)?;
                b.same(v.eta(i, j, [e, a, e, bb]), one)
            });
            r.push(names[2].clone(), c, false, f);

            let (c, f) = scan_tuples(n, 6, |q| {
                let [u, vv, w, x, y, z] = [q[0], q[1], q[2], q[3], q[4], q[5]];
                let lhs = b.seq(&[
                    v.tm(i, v.eta(i, j, [u, vv, w, x]), v.id(v.t(j, y, z))),
                    v.eta(i, j, [v.t(i, u, w), v.t(i, vv, x), y, z]),
                    v.tm(j, v.alpha(i, u, w, y), v.alpha(i, vv, x, z)),
                ]);
                let rhs = b.seq(&[
                    v.alpha(i, v.t(j, u, vv), v.t(j, w, x), v.t(j, y, z)),
                    v.tm(i, v.id(v.t(j, u, vv)), v.eta(i, j, [w, x, y, z])),
                    v.eta(i, j, [u, vv, v.t(i, w, y), v.t(i, x, z)]),
                ]);
                b.same(lhs, rhs)
            });
            r.push(names[3].clone(), c, false, f);

            let (c, f) = scan_tuples(n, 6, |q| {
                let [u, vv, w, x, y, z] = [q[0], q[1], q[2], q[3], q[4], q[5]];
                let lhs = b.seq(&[
                    v.eta(i, j, [v.t(j, u, vv), w, v.t(j, x, y), z]),
                    v.tm(j, v.eta(i, j, [u, vv, x, y]), v.id(v.t(i, w, z))),
                    v.alpha(j, v.t(i, u, x), v.t(i, vv, y), v.t(i, w, z)),
                ]);
                let rhs = b.seq(&[
                    v.tm(i, v.alpha(j, u, vv, w), v.alpha(j, x, y, z)),
                    v.eta(i, j, [u, v.t(j, vv, w), x, v.t(j, y, z)]),
                    v.tm(j, v.id(v.t(i, u, x)), v.eta(i, j, [vv, w, y, z])),
                ]);
                b.same(lhs, rhs)
            });
            r.push(names[4].clone(), c, false, f);
        }
    }
    for i in 1..=k {
        for j in i + 1..=k {
            for l in j + 1..=k {
                let name = format!("(e) hexagon η{i}{j} η{i}{l} η{j}{l}");
                if thin || mistyped {
                    r.push(name, 0, true, None);
                    continue;
                }
                let (c, f) = scan_tuples(n, 8, |q| {
                    let [a, bb, cc, d, ee, ff, g, h] = [q[0], q[1], q[2], q[3], q[4], q[5], q[6], q[7]];
                    let lhs = b.seq(&[
                        v.tm(i, v.eta(j, l, [a, bb, cc, d]), v.eta(j, l, [ee, ff, g, h])),
                        v.eta(i, l, [v.t(j, a, cc), v.t(j, bb, d), v.t(j, ee, g), v.t(j, ff, h)]),
                        v.tm(l, v.eta(i, j, [a, cc, ee, g]), v.eta(i, j, [bb, d, ff, h])),
                    ]);
                    let rhs = b.seq(&[
                        v.eta(i, j, [v.t(l, a, bb), v.t(l, cc, d), v.t(l, ee, ff), v.t(l, g, h)]),
                        v.tm(j, v.eta(i, l, [a, bb, ee, ff]), v.eta(i, l, [cc, d, g, h])),
                        v.eta(j, l, [v.t(i, a, ee), v.t(i, bb, ff), v.t(i, cc, g), v.t(i, d, h)]),
                    ]);
                    b.same(lhs, rhs)
                });
                r.push(name, c, false, f);
            }
        }
    }
    Ok(r)
}
