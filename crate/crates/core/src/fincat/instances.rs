//! Ready-made instances.

use alloc::format;
use alloc::vec::Vec;

use super::category::FinCategory;
use super::monoidal::{FinMonoidalInstance, Tensor};
use super::{flat, Family, FincatError};

/// `V_K`: objects `0..=K`, a single morphism `x → y` iff `x ≥ y`, tensor
/// `min(x + y, K)`, unit `0`. Thin and symmetric, with one product.
pub fn truncated_sum(max: usize) -> FinMonoidalInstance {
    let n = max + 1;
    let arrows: Vec<_> = (0..n).flat_map(|x| (0..=x).map(move |y| (x, y))).collect();
    let base = FinCategory::thin(n, &arrows).expect("reflexive");
    let obj = (0..n).flat_map(|x| (0..n).map(move |y| (x + y).min(max))).collect();
    FinMonoidalInstance::new(base, 0, alloc::vec![Tensor::induced(obj)], alloc::vec![Family::induced()])
        .and_then(|v| v.with_symmetry(Family::induced()))
        .expect("well-formed tables")
}

/// The discrete category on `0..n` with tensor `op` and identity
/// structure maps. `op` must be an associative commutative monoid with
/// unit `unit` for the checks to pass.
pub fn discrete_monoid(
    n: usize,
    unit: usize,
    op: impl Fn(usize, usize) -> usize,
) -> Result<FinMonoidalInstance, FincatError> {
    let arrows: Vec<_> = (0..n).map(|x| (x, x)).collect();
    let base = FinCategory::thin(n, &arrows)?;
    let obj = (0..n).flat_map(|x| (0..n).map(|y| op(x, y)).collect::<Vec<_>>()).collect();
    FinMonoidalInstance::new(base, unit, alloc::vec![Tensor::induced(obj)], alloc::vec![Family::induced()])?
        .with_symmetry(Family::induced())
}

/// `Z/n` under addition as a discrete instance.
pub fn cyclic_discrete(n: usize) -> FinMonoidalInstance {
    discrete_monoid(n, 0, |x, y| (x + y) % n).expect("n ≥ 1")
}

/// Objects `Z/n` (`n` even), `Hom(x, x) = {±1}` as morphisms `2x` and
/// `2x + 1`, tensor adds objects and multiplies signs, identity
/// associators and symmetry `c_{xy} = (-1)^{xy}`. Not thin.
pub fn signed_cyclic(n: usize) -> Result<FinMonoidalInstance, FincatError> {
    if n == 0 || n % 2 == 1 {
        return Err(FincatError::Invalid(format!("signed instance needs an even object count, got {n}")));
    }
    let m = 2 * n;
    let morphisms: Vec<_> = (0..m).map(|f| (f / 2, f / 2)).collect();
    let identities: Vec<_> = (0..n).map(|x| 2 * x).collect();
    let mor = |x: usize, neg: bool| 2 * x + neg as usize;
    let mut compose = Vec::new();
    for x in 0..n {
        for s in [false, true] {
            for t in [false, true] {
                compose.push((mor(x, s), mor(x, t), mor(x, s ^ t)));
            }
        }
    }
    let base = FinCategory::new(n, &morphisms, &identities, &compose)?;
    let obj = (0..n).flat_map(|x| (0..n).map(move |y| (x + y) % n)).collect();
    let mut tm = Family::dense(m * m);
    for f in 0..m {
        for g in 0..m {
            tm.set(f * m + g, mor((f / 2 + g / 2) % n, (f % 2 == 1) ^ (g % 2 == 1)));
        }
    }
    let mut alpha = Family::dense(n * n * n);
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                alpha.set(flat(n, &[u, v, w]), mor((u + v + w) % n, false));
            }
        }
    }
    let mut c = Family::dense(n * n);
    for x in 0..n {
        for y in 0..n {
            c.set(x * n + y, mor((x + y) % n, x * y % 2 == 1));
        }
    }
    FinMonoidalInstance::new(base, 0, alloc::vec![Tensor { obj, mor: tm }], alloc::vec![alpha])?.with_symmetry(c)
}
