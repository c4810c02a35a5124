use super::backends::{Backend, Extension, Product, Quotient, TableGroup, Unitriangular, MAX_UT_DIM};
use super::radix::MixedRadix;
use super::{FiniteGroup, MAX_ORDER};
use crate::arith::{is_prime, prime_power};
use crate::error::{Error, Result};
use crate::subgroup::Subgroup;
use crate::{Elem, IntMatrix};

fn prime_of(order: usize) -> Option<u32> {
    prime_power(order as u64).map(|(p, _)| p)
}

fn checked_order<I: IntoIterator<Item = u64>>(factors: I) -> Result<usize> {
    let mut order: u64 = 1;
    for f in factors {
        order = order
            .checked_mul(f)
            .filter(|&o| o <= MAX_ORDER as u64)
            .ok_or(Error::cap("group order", u128::from(order) * u128::from(f), MAX_ORDER as u64))?;
    }
    Ok(order as usize)
}

pub fn build_cyclic(n: u64) -> Result<FiniteGroup> {
    build_abelian(&[n])
}

/// Abelian group `Z/d_1 + ... + Z/d_r`; ids are mixed-radix tuples with the
/// first coordinate least significant.
pub fn build_abelian(invariants: &[u64]) -> Result<FiniteGroup> {
    if invariants.is_empty() || invariants.iter().any(|&d| d == 0) {
        return Err(Error::InvalidParameter(
            "abelian invariants must be a nonempty list of positive integers".into(),
        ));
    }
    let order = checked_order(invariants.iter().copied())?;
    let moduli: Vec<u32> = invariants.iter().map(|&d| d as u32).collect();
    Ok(FiniteGroup::from_backend(
        order,
        prime_of(order),
        Backend::Abelian(MixedRadix::new(&moduli)),
    ))
}

pub fn build_direct_product(factors: &[FiniteGroup]) -> Result<FiniteGroup> {
    if factors.is_empty() {
        return Err(Error::InvalidParameter("direct product of no factors".into()));
    }
    let order = checked_order(factors.iter().map(|f| f.order() as u64))?;
    Ok(FiniteGroup::from_backend(
        order,
        prime_of(order),
        Backend::Product(Product::new(factors.to_vec())),
    ))
}

/// Upper unitriangular `n x n` matrices over `Z/p`, order `p^(n(n-1)/2)`.
pub fn build_unitriangular(n: usize, p: u32) -> Result<FiniteGroup> {
    if n < 2 || n > MAX_UT_DIM {
        return Err(Error::InvalidParameter(format!(
            "unitriangular dimension must be in 2..={MAX_UT_DIM}, got {n}"
        )));
    }
    if !is_prime(p as u64) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    let m = n * (n - 1) / 2;
    let order = checked_order(std::iter::repeat(p as u64).take(m))?;
    Ok(FiniteGroup::from_backend(
        order,
        Some(p),
        Backend::Unitriangular(Unitriangular::new(n, p, order)),
    ))
}

/// Id of an upper unitriangular matrix given its strictly-upper entries.
pub fn unitriangular_element(g: &FiniteGroup, entries: &[(usize, usize, u32)]) -> Result<Elem> {
    match g.backend() {
        Backend::Unitriangular(u) => {
            if entries.iter().any(|&(i, j, _)| i >= j || j >= u.n) {
                return Err(Error::InvalidParameter("entry is not strictly upper".into()));
            }
            Ok(u.encode(entries))
        }
        _ => Err(Error::InvalidParameter("not a unitriangular group".into())),
    }
}

/// Data for a cyclic-by-abelian extension `1 -> N -> G -> C_p -> 1`.
///
/// `N = Z/d_1 + ... + Z/d_r`; the distinguished generator `y` acts on `N`
/// by `v -> action * v` (column vectors) and `y^p = cocycle`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionData {
    pub p: u32,
    pub invariants: Vec<u64>,
    pub action: IntMatrix,
    pub cocycle: Vec<i64>,
}

impl ExtensionData {
    /// Split extension with trivial action.
    pub fn trivial(p: u32, invariants: Vec<u64>) -> Self {
        let r = invariants.len();
        ExtensionData {
            p,
            invariants,
            action: IntMatrix::identity(r),
            cocycle: vec![0; r],
        }
    }
}

/// Group of pairs `(j, v)` with
/// `(j1, v1)(j2, v2) = ((j1 + j2) mod p, alpha^j2(v1) + v2 + floor((j1 + j2)/p) z)`.
///
/// The id of `(j, v)` is `j * |N| + id(v)`.
pub fn build_extension(data: &ExtensionData) -> Result<FiniteGroup> {
    let p = data.p;
    if !is_prime(p as u64) {
        return Err(Error::InvalidExtension(format!("{p} is not prime")));
    }
    let r = data.invariants.len();
    if data.invariants.iter().any(|&d| d == 0) {
        return Err(Error::InvalidExtension("kernel invariants must be positive".into()));
    }
    if data.action.rows() != r || data.action.cols() != r || data.cocycle.len() != r {
        return Err(Error::InvalidExtension(format!(
            "action must be {r}x{r} and cocycle of length {r}"
        )));
    }
    let order = checked_order(std::iter::once(p as u64).chain(data.invariants.iter().copied()))?;
    let moduli: Vec<u32> = data.invariants.iter().map(|&d| d as u32).collect();
    for i in 0..r {
        for j in 0..r {
            let a = *data.action.get(i, j) as i128;
            if (a * moduli[j] as i128).rem_euclid(moduli[i] as i128) != 0 {
                return Err(Error::InvalidExtension(format!(
                    "action entry ({i}, {j}) is not well defined modulo the invariants"
                )));
            }
        }
    }
    let kernel = MixedRadix::new(&moduli);
    let n = kernel.order();
    let mut alpha = vec![0 as Elem; n];
    let mut seen = vec![false; n];
    for v in 0..n as Elem {
        let image: Vec<i64> = (0..r)
            .map(|i| {
                kernel
                    .coords(v)
                    .iter()
                    .enumerate()
                    .map(|(j, &c)| {
                        (*data.action.get(i, j) as i128 * c as i128).rem_euclid(moduli[i] as i128)
                    })
                    .sum::<i128>()
                    .rem_euclid(moduli[i] as i128) as i64
            })
            .collect();
        let w = kernel.encode(&image);
        if seen[w as usize] {
            return Err(Error::InvalidExtension("action is not injective".into()));
        }
        seen[w as usize] = true;
        alpha[v as usize] = w;
    }
    let mut act = Vec::with_capacity(p as usize * n);
    act.extend(0..n as Elem);
    for j in 1..p as usize {
        let prev = (j - 1) * n;
        for v in 0..n {
            let w = alpha[act[prev + v] as usize];
            act.push(w);
        }
    }
    let last = (p as usize - 1) * n;
    if (0..n).any(|v| alpha[act[last + v] as usize] != v as Elem) {
        return Err(Error::InvalidExtension("action order does not divide p".into()));
    }
    let z = kernel.encode(&data.cocycle);
    if alpha[z as usize] != z {
        return Err(Error::InvalidExtension("cocycle element is not fixed by the action".into()));
    }
    if kernel.scale(z, p as u64) != 0 {
        return Err(Error::InvalidExtension("cocycle element has order not dividing p".into()));
    }
    Ok(FiniteGroup::from_backend(
        order,
        prime_of(order),
        Backend::Extension(Extension {
            p,
            kernel,
            act,
            z,
        }),
    ))
}

/// `<a, b | a^(p^2) = b^p = 1, b^-1 a b = a^(1+p)>`, order `p^3`.
pub fn build_modular(p: u32) -> Result<FiniteGroup> {
    let q = (p as u64) * (p as u64);
    build_extension(&ExtensionData {
        p,
        invariants: vec![q],
        action: IntMatrix::from_i64_rows(&[vec![1 + p as i64]])?,
        cocycle: vec![0],
    })
}

/// Coset group `G/N` plus the projection `G -> G/N` indexed by element id.
/// Each coset is represented by its smallest element id.
pub fn build_quotient(g: &FiniteGroup, n: &Subgroup) -> Result<(FiniteGroup, Vec<Elem>)> {
    if !n.parent().same_as(g) {
        return Err(Error::ParentMismatch);
    }
    if !n.is_normal_in(&Subgroup::whole(g))? {
        return Err(Error::NotNormal);
    }
    let mut coset_of = vec![Elem::MAX; g.order()];
    let mut reps = Vec::with_capacity(g.order() / n.order());
    for a in g.elements() {
        if coset_of[a as usize] != Elem::MAX {
            continue;
        }
        let id = reps.len() as Elem;
        reps.push(a);
        for &s in n.members() {
            coset_of[g.mul(a, s) as usize] = id;
        }
    }
    let order = reps.len();
    let prime = prime_of(order).or(g.prime());
    let projection = coset_of.clone();
    let q = FiniteGroup::from_backend(
        order,
        prime,
        Backend::Quotient(Quotient {
            parent: g.clone(),
            coset_of,
            reps,
        }),
    );
    Ok((q, projection))
}

/// Group from an explicit Cayley table (`table[a][b] = a * b`, identity 0).
pub fn from_table(table: Vec<Vec<Elem>>) -> Result<FiniteGroup> {
    let n = table.len();
    if n == 0 || n > MAX_ORDER {
        return Err(Error::InvalidTable(format!("order {n} out of range")));
    }
    if table.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidTable("table is not square".into()));
    }
    for a in 0..n {
        if table[0][a] as usize != a || table[a][0] as usize != a {
            return Err(Error::InvalidTable("0 is not the identity".into()));
        }
        let mut row_seen = vec![false; n];
        let mut col_seen = vec![false; n];
        for b in 0..n {
            let (x, y) = (table[a][b] as usize, table[b][a] as usize);
            if x >= n || y >= n || row_seen[x] || col_seen[y] {
                return Err(Error::InvalidTable("table is not a Latin square".into()));
            }
            row_seen[x] = true;
            col_seen[y] = true;
        }
    }
    let flat: Vec<Elem> = table.into_iter().flatten().collect();
    let g = FiniteGroup::from_backend(
        n,
        prime_of(n),
        Backend::Table(TableGroup {
            order: n,
            table: flat,
        }),
    );
    let gens = Subgroup::whole(&g).generators().to_vec();
    for &s in &gens {
        for a in g.elements() {
            for b in g.elements() {
                if g.mul(a, g.mul(b, s)) != g.mul(g.mul(a, b), s) {
                    return Err(Error::InvalidTable(format!(
                        "not associative at ({a}, {b}, {s})"
                    )));
                }
            }
        }
    }
    Ok(g)
}
