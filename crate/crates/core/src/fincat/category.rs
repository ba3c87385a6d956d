use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::report::{Failure, Report};
use super::{Family, FincatError, MorId, ObjId};

/// A finite category with an explicit or induced composition table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    objects: usize,
    src: Vec<ObjId>,
    tgt: Vec<ObjId>,
    identity: Vec<MorId>,
    homs: Vec<Vec<MorId>>,
    /// Indexed by `g * morphisms + f` for the composite `g ∘ f`.
    compose: Family,
    thin: bool,
}

impl FinCategory {
    /// A category from explicit tables. `compose` lists `(g, f, g ∘ f)`.
    /// Only index ranges are checked here; see [`FinCategory::validate`].
    pub fn new(
        objects: usize,
        morphisms: &[(ObjId, ObjId)],
        identities: &[MorId],
        compose: &[(MorId, MorId, MorId)],
    ) -> Result<Self, FincatError> {
        let m = morphisms.len();
        for &(s, t) in morphisms {
            let bad = if s >= objects { s } else { t };
            if s >= objects || t >= objects {
                return Err(FincatError::OutOfRange { what: "object", index: bad });
            }
        }
        if identities.len() != objects {
            return Err(FincatError::Invalid(format!(
                "{} identities for {objects} objects",
                identities.len()
            )));
        }
        if let Some(&bad) = identities.iter().find(|&&i| i >= m) {
            return Err(FincatError::OutOfRange { what: "morphism", index: bad });
        }
        let mut table = Family::dense(m * m);
        for &(g, f, h) in compose {
            for x in [g, f, h] {
                if x >= m {
                    return Err(FincatError::OutOfRange { what: "morphism", index: x });
                }
            }
            table.set(g * m + f, h);
        }
        Ok(Self::assemble(objects, morphisms, identities.to_vec(), table))
    }

    /// The thin category on `objects` with one morphism per listed pair.
    /// Repeated pairs are merged and every `(x, x)` must be present.
    pub fn thin(objects: usize, arrows: &[(ObjId, ObjId)]) -> Result<Self, FincatError> {
        let mut pairs: Vec<(ObjId, ObjId)> = Vec::with_capacity(arrows.len());
        let mut seen = alloc::collections::BTreeSet::new();
        for &(s, t) in arrows {
            if s >= objects || t >= objects {
                return Err(FincatError::OutOfRange {
                    what: "object",
                    index: s.max(t),
                });
            }
            if seen.insert((s, t)) {
                pairs.push((s, t));
            }
        }
        let mut identity = Vec::with_capacity(objects);
        for x in 0..objects {
            match pairs.iter().position(|&p| p == (x, x)) {
                Some(i) => identity.push(i),
                None => return Err(FincatError::Invalid(format!("object {x} has no identity"))),
            }
        }
        Ok(Self::assemble(objects, &pairs, identity, Family::induced()))
    }

    fn assemble(objects: usize, morphisms: &[(ObjId, ObjId)], identity: Vec<MorId>, compose: Family) -> Self {
        let mut homs = alloc::vec![Vec::new(); objects * objects];
        for (i, &(s, t)) in morphisms.iter().enumerate() {
            homs[s * objects + t].push(i);
        }
        let thin = homs.iter().all(|h| h.len() <= 1);
        FinCategory {
            objects,
            src: morphisms.iter().map(|p| p.0).collect(),
            tgt: morphisms.iter().map(|p| p.1).collect(),
            identity,
            homs,
            compose,
            thin,
        }
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn morphisms(&self) -> usize {
        self.src.len()
    }

    pub fn src(&self, f: MorId) -> ObjId {
        self.src[f]
    }

    pub fn tgt(&self, f: MorId) -> ObjId {
        self.tgt[f]
    }

    pub fn id(&self, x: ObjId) -> MorId {
        self.identity[x]
    }

    pub fn hom(&self, x: ObjId, y: ObjId) -> &[MorId] {
        &self.homs[x * self.objects + y]
    }

    /// Every hom-set has at most one element.
    pub fn is_thin(&self) -> bool {
        self.thin
    }

    /// The only morphism `x → y`, if there is exactly one.
    pub fn unique(&self, x: ObjId, y: ObjId) -> Option<MorId> {
        match self.hom(x, y) {
            [f] => Some(*f),
            _ => None,
        }
    }

    /// The cell of `fam` at `idx`, falling back to the unique `s → t`.
    pub fn resolve(&self, fam: &Family, idx: usize, s: ObjId, t: ObjId) -> Option<MorId> {
        match fam.explicit(idx) {
            Some(c) => c,
            None => self.unique(s, t),
        }
    }

    /// `g ∘ f`, or `None` if the pair is not composable or the cell is empty.
    pub fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        if self.tgt[f] != self.src[g] {
            return None;
        }
        self.resolve(&self.compose, g * self.morphisms() + f, self.src[f], self.tgt[g])
    }

    /// The composite of a path given in diagram order: `seq([f, g, h]) = h ∘ g ∘ f`.
    pub fn seq(&self, path: &[Option<MorId>]) -> Option<MorId> {
        let mut acc = (*path.first()?)?;
        for &m in &path[1..] {
            acc = self.compose(m?, acc)?;
        }
        Some(acc)
    }

    /// A two-sided inverse of `f`, if one exists.
    pub fn inverse(&self, f: MorId) -> Option<MorId> {
        let (s, t) = (self.src[f], self.tgt[f]);
        self.hom(t, s)
            .iter()
            .copied()
            .find(|&g| self.compose(g, f) == Some(self.id(s)) && self.compose(f, g) == Some(self.id(t)))
    }

    pub fn compose_cell(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.resolve(&self.compose, g * self.morphisms() + f, self.src[f], self.tgt[g])
    }

    /// Overwrites the cell for `g ∘ f`.
    pub fn set_compose(&mut self, g: MorId, f: MorId, h: MorId) {
        let m = self.morphisms();
        self.compose.set(g * m + f, h);
    }

    pub(crate) fn describe(&self, f: Option<MorId>) -> String {
        match f {
            Some(f) => format!("#{f}: {} -> {}", self.src[f], self.tgt[f]),
            None => String::from("undefined"),
        }
    }

    /// Checks that `f` is a morphism `s → t`.
    pub(crate) fn typed(&self, f: Option<MorId>, s: ObjId, t: ObjId) -> Result<(), String> {
        match f {
            Some(f) if f < self.morphisms() && self.src[f] == s && self.tgt[f] == t => Ok(()),
            other => Err(format!("expected a morphism {s} -> {t}, found {}", self.describe(other))),
        }
    }

    pub(crate) fn same(&self, lhs: Option<MorId>, rhs: Option<MorId>) -> Result<(), String> {
        match (lhs, rhs) {
            (Some(a), Some(b)) if a == b => Ok(()),
            _ => Err(format!("{} differs from {}", self.describe(lhs), self.describe(rhs))),
        }
    }

    fn composable_pairs(&self) -> impl Iterator<Item = (MorId, MorId)> + '_ {
        (0..self.morphisms())
            .flat_map(move |g| (0..self.objects).flat_map(move |x| self.hom(x, self.src[g]).iter().map(move |&f| (g, f))))
    }

    /// Category laws. Over a thin category, typing of composites implies the
    /// identity and associativity laws.
    pub fn validate(&self) -> Report {
        let mut r = Report::new();
        let mut cases = 0u64;
        let mut fail = None;
        for (i, &x) in self.identity.iter().enumerate() {
            cases += 1;
            if let Err(detail) = self.typed(Some(x), i, i) {
                fail = Some(Failure { tuple: alloc::vec![i], detail });
                break;
            }
        }
        r.push("identity typing", cases, false, fail);

        let mut cases = 0u64;
        let mut fail = None;
        for (g, f) in self.composable_pairs() {
            cases += 1;
            if let Err(detail) = self.typed(self.compose_cell(g, f), self.src[f], self.tgt[g]) {
                fail = Some(Failure {
                    tuple: alloc::vec![g, f],
                    detail: format!("composition cell: {detail}"),
                });
                break;
            }
        }
        r.push("composition typing", cases, false, fail);
        if !r.passed() || self.thin {
            r.push("identity laws", 0, true, None);
            r.push("associativity", 0, true, None);
            return r;
        }

        let mut cases = 0u64;
        let mut fail = None;
        for f in 0..self.morphisms() {
            cases += 1;
            let l = self.compose(self.id(self.tgt[f]), f);
            let rr = self.compose(f, self.id(self.src[f]));
            if let Err(detail) = self.same(l, Some(f)).and_then(|_| self.same(rr, Some(f))) {
                fail = Some(Failure { tuple: alloc::vec![f], detail });
                break;
            }
        }
        r.push("identity laws", cases, false, fail);

        let mut cases = 0u64;
        let mut fail = None;
        'outer: for (g, f) in self.composable_pairs() {
            for y in 0..self.objects {
                for &h in self.hom(self.tgt[g], y) {
                    cases += 1;
                    let l = self.seq(&[Some(f), self.compose(h, g)]);
                    let rr = self.seq(&[self.compose(g, f), Some(h)]);
                    if let Err(detail) = self.same(l, rr) {
                        fail = Some(Failure {
                            tuple: alloc::vec![h, g, f],
                            detail,
                        });
                        break 'outer;
                    }
                }
            }
        }
        r.push("associativity", cases, false, fail);
        r
    }
}
