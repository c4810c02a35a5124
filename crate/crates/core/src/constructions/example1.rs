//! The maximal-class family `G_r`.
//!
//! `M = Z^(p-1)` carries the automorphism `alpha` of order `p` given by the
//! companion matrix of `1 + t + ... + t^(p-1)`. With `M_j = (alpha - 1)^(j-1) M`
//! the quotient `N_r = M / M_r` has order `p^(r-1)`, and `G_r` is the
//! extension of `N_r` by `<y>` where `y` acts as `alpha` and `y^p = z` for a
//! generator `z` of `M_{r-1} / M_r`.
//!
//! The lattice is handled over the integers: `det (alpha - 1)^(r-1)` is
//! `±p^(r-1)`, so the integral quotient already equals the p-adic one.

use super::snf::smith_normal_form;
use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::{build_extension, ExtensionData, FiniteGroup, MAX_ORDER};
use crate::subgroup::Subgroup;
use crate::{Elem, IntMatrix};

/// `(p-1) x (p-1)` matrix with `A e_i = e_{i+1}` for `i <= p-2` and
/// `A e_{p-1} = -(e_1 + ... + e_{p-1})`.
pub fn companion_alpha(p: u32) -> Result<IntMatrix> {
    if p == 2 || !is_prime(p as u64) {
        return Err(Error::InvalidParameter(format!("{p} is not an odd prime")));
    }
    let n = p as usize - 1;
    let mut a = IntMatrix::zeros(n, n);
    for i in 0..n - 1 {
        a.set(i + 1, i, 1);
    }
    for i in 0..n {
        a.set(i, n - 1, -1);
    }
    Ok(a)
}

/// `G_r` together with the data needed to inspect it.
#[derive(Clone, Debug)]
pub struct Example1Group {
    pub p: u32,
    pub r: u32,
    /// `true` for the split variant `y^p = 1`.
    pub split: bool,
    pub group: FiniteGroup,
    /// The element `z` of the kernel (fixed even in the split variant).
    pub z_id: Elem,
    /// Image of `N_r`, the ids `0..p^(r-1)`.
    pub kernel: Subgroup,
    pub data: ExtensionData,
    /// Images of `M_1 > M_2 > ... > M_r` in the kernel.
    pub filtration: Vec<Subgroup>,
}

impl Example1Group {
    pub fn kernel_order(&self) -> usize {
        self.kernel.order()
    }

    /// The element `y^j x` for a kernel element `x`.
    pub fn element(&self, j: u32, kernel_elem: Elem) -> Elem {
        debug_assert!(j < self.p && (kernel_elem as usize) < self.kernel_order());
        j * self.kernel_order() as Elem + kernel_elem
    }

    /// Splits an id into `(j, x)` with `id = y^j x`.
    pub fn decompose(&self, id: Elem) -> (u32, Elem) {
        let n = self.kernel_order() as Elem;
        (id / n, id % n)
    }

    /// The distinguished generator `y`.
    pub fn y(&self) -> Elem {
        self.element(1, 0)
    }
}

fn encode(invariants: &[u64], coords: &[i64]) -> Elem {
    let mut acc = 0u64;
    let mut w = 1u64;
    for (&d, &c) in invariants.iter().zip(coords) {
        acc += c.rem_euclid(d as i64) as u64 * w;
        w *= d;
    }
    acc as Elem
}

/// Non-split `G_r` of order `p^r`.
pub fn construct_example1(p: u32, r: u32) -> Result<Example1Group> {
    construct_example1_variant(p, r, false)
}

pub fn construct_example1_variant(p: u32, r: u32, split: bool) -> Result<Example1Group> {
    let a = companion_alpha(p)?;
    if r < 2 {
        return Err(Error::InvalidParameter(format!("r must be at least 2, got {r}")));
    }
    let order = (p as u128).pow(r);
    if order > MAX_ORDER as u128 {
        return Err(Error::cap("group order", order, MAX_ORDER as u64));
    }
    let n = a.rows();
    let step = a.checked_sub(&IntMatrix::identity(n))?;
    let b = step.pow(r - 1)?;
    let snf = smith_normal_form(&b)?;
    let kept: Vec<usize> = (0..n).filter(|&t| snf.diagonal[t] != 1).collect();
    let invariants: Vec<u64> = kept.iter().map(|&t| snf.diagonal[t] as u64).collect();
    let kernel_order: u128 = invariants.iter().map(|&d| d as u128).product();
    if kernel_order != (p as u128).pow(r - 1) || invariants.contains(&0) {
        return Err(Error::Construction(format!(
            "quotient M/M_r has invariants {invariants:?}, expected order {p}^{}",
            r - 1
        )));
    }
    let transported = snf.left.checked_mul(&a)?.checked_mul(&snf.left_inverse)?;
    let action_rows: Vec<Vec<i64>> = kept
        .iter()
        .map(|&i| kept.iter().map(|&j| *transported.get(i, j)).collect())
        .collect();
    let project = |v: &[i64]| -> Result<Vec<i64>> {
        let w = snf.left.mul_vec(v)?;
        Ok(kept
            .iter()
            .zip(&invariants)
            .map(|(&t, &d)| w[t].rem_euclid(d as i64))
            .collect())
    };

    let mut filtration = Vec::with_capacity(r as usize);
    let mut power = IntMatrix::identity(n);
    let mut images: Vec<Vec<Vec<i64>>> = Vec::with_capacity(r as usize);
    for _ in 0..r {
        images.push((0..n).map(|j| project(&power.column(j))).collect::<Result<_>>()?);
        power = power.checked_mul(&step)?;
    }

    // z: the first basis vector whose image under (alpha - 1)^(r-2) is nonzero of order p
    let z_coords = images[r as usize - 2]
        .iter()
        .find(|c| {
            c.iter().any(|&x| x != 0)
                && c.iter()
                    .zip(&invariants)
                    .all(|(&x, &d)| (x * p as i64).rem_euclid(d as i64) == 0)
        })
        .cloned()
        .ok_or_else(|| Error::Construction("no generator of M_{r-1}/M_r found".into()))?;

    let data = ExtensionData {
        p,
        invariants: invariants.clone(),
        action: IntMatrix::from_i64_rows(&action_rows)?,
        cocycle: if split { vec![0; kept.len()] } else { z_coords.clone() },
    };
    let group = build_extension(&data)?;
    let z_id = encode(&invariants, &z_coords);
    let kernel = Subgroup::from_elements(&group, 0..kernel_order as Elem);

    for (j, cols) in images.iter().enumerate() {
        let sub = Subgroup::from_elements(&group, cols.iter().map(|c| encode(&invariants, c)));
        let expected = (p as usize).pow(r - 1 - j as u32);
        if sub.order() != expected {
            return Err(Error::Construction(format!(
                "image of M_{} has order {}, expected {expected}",
                j + 1,
                sub.order()
            )));
        }
        filtration.push(sub);
    }
    if !filtration[r as usize - 2].contains(z_id) {
        return Err(Error::Construction("z does not lie in the image of M_{r-1}".into()));
    }

    Ok(Example1Group {
        p,
        r,
        split,
        group,
        z_id,
        kernel,
        data,
        filtration,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::snf::smith_normal_form;

    #[test]
    fn companion_at_three() {
        let a = companion_alpha(3).unwrap();
        assert_eq!(a, IntMatrix::from_i64_rows(&[vec![0, -1], vec![1, -1]]).unwrap());
        assert_eq!(a.pow(3).unwrap(), IntMatrix::identity(2));
        let am1 = a.checked_sub(&IntMatrix::identity(2)).unwrap();
        assert_eq!(am1.determinant().unwrap(), 3);
        assert!(companion_alpha(2).is_err());
        assert!(companion_alpha(9).is_err());
    }

    #[test]
    fn companion_has_order_p_and_det_p() {
        for p in [3u32, 5, 7, 11] {
            let a = companion_alpha(p).unwrap();
            let n = a.rows();
            assert_eq!(a.pow(p).unwrap(), IntMatrix::identity(n));
            assert_ne!(a, IntMatrix::identity(n));
            let am1 = a.checked_sub(&IntMatrix::identity(n)).unwrap();
            assert_eq!(am1.determinant().unwrap().abs(), p as i64);
            for r in 2..6 {
                let det = am1.pow(r - 1).unwrap().determinant().unwrap();
                assert_eq!(det.abs(), (p as i64).pow(r - 1));
            }
        }
    }

    #[test]
    fn g34_kernel_invariants() {
        let a = companion_alpha(3).unwrap();
        let am1 = a.checked_sub(&IntMatrix::identity(2)).unwrap();
        assert_eq!(
            am1.pow(3).unwrap(),
            IntMatrix::from_i64_rows(&[vec![3, -6], vec![6, -3]]).unwrap()
        );
        assert_eq!(smith_normal_form(&am1.pow(3).unwrap()).unwrap().diagonal, vec![3, 9]);
        let g = construct_example1(3, 4).unwrap();
        assert_eq!(g.group.order(), 81);
        assert_eq!(g.data.invariants, vec![3, 9]);
        assert_eq!(g.kernel_order(), 27);
    }

    #[test]
    fn parameter_errors() {
        assert!(construct_example1(3, 1).is_err());
        assert!(construct_example1(4, 3).is_err());
        assert!(construct_example1(5, 9).unwrap_err().is_cap_exceeded());
    }

    #[test]
    fn z_is_central_of_order_p() {
        for (p, r) in [(3, 2), (3, 3), (3, 4), (3, 6), (5, 2), (5, 4), (7, 3)] {
            let e = construct_example1(p, r).unwrap();
            let g = &e.group;
            assert_eq!(g.order(), (p as usize).pow(r));
            assert_ne!(e.z_id, 0);
            assert_eq!(g.element_order(e.z_id).unwrap(), p as u64);
            assert!(g.elements().all(|x| g.mul(x, e.z_id) == g.mul(e.z_id, x)));
            assert_eq!(g.pow(e.y(), p as i64), e.z_id);
            let split = construct_example1_variant(p, r, true).unwrap();
            assert_eq!(split.group.pow(split.y(), p as i64), 0);
        }
    }
}
