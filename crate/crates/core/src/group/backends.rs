//! Structured multiplication rules. Every backend maps canonical ids
//! `0..order` bijectively onto its elements with 0 the identity.

use super::radix::MixedRadix;
use super::FiniteGroup;
use crate::Elem;

pub(crate) const MAX_UT_DIM: usize = 8;

#[derive(Debug)]
pub(crate) enum Backend {
    Table(TableGroup),
    Abelian(MixedRadix),
    Unitriangular(Unitriangular),
    Extension(Extension),
    Product(Product),
    Quotient(Quotient),
}

impl Backend {
    #[inline]
    pub(crate) fn mul(&self, a: Elem, b: Elem) -> Elem {
        match self {
            Backend::Table(t) => t.table[a as usize * t.order + b as usize],
            Backend::Abelian(r) => r.add(a, b),
            Backend::Unitriangular(u) => u.mul(a, b),
            Backend::Extension(e) => e.mul(a, b),
            Backend::Product(p) => p.mul(a, b),
            Backend::Quotient(q) => q.mul(a, b),
        }
    }

    /// Inverse computed directly from the structure, without a table.
    pub(crate) fn inv(&self, a: Elem) -> Elem {
        match self {
            Backend::Table(t) => (0..t.order as Elem)
                .find(|&b| t.table[a as usize * t.order + b as usize] == 0)
                .expect("validated table has inverses"),
            Backend::Abelian(r) => r.neg(a),
            Backend::Unitriangular(_) => {
                // unipotent: a^(m-1) with a^m = 1, m a small power of p
                let mut prev = 0;
                let mut cur = a;
                while cur != 0 {
                    prev = cur;
                    cur = self.mul(cur, a);
                }
                prev
            }
            Backend::Extension(e) => e.inv(a),
            Backend::Product(p) => p.inv(a),
            Backend::Quotient(q) => q.coset_of[q.parent.inv(q.reps[a as usize]) as usize],
        }
    }

    pub(crate) fn name(&self) -> &'static str {
        match self {
            Backend::Table(_) => "table",
            Backend::Abelian(_) => "abelian",
            Backend::Unitriangular(_) => "unitriangular",
            Backend::Extension(_) => "extension",
            Backend::Product(_) => "product",
            Backend::Quotient(_) => "quotient",
        }
    }
}

#[derive(Debug)]
pub(crate) struct TableGroup {
    pub(crate) order: usize,
    pub(crate) table: Vec<Elem>,
}

/// Upper unitriangular `n x n` matrices over `Z/p`; the strictly upper
/// entries, ordered by superdiagonal then row, are the base-`p` digits of the id.
#[derive(Debug)]
pub(crate) struct Unitriangular {
    pub(crate) n: usize,
    pub(crate) p: u32,
    positions: Vec<(usize, usize)>,
    weights: Vec<u32>,
    digits: Vec<u8>,
}

impl Unitriangular {
    pub(crate) fn new(n: usize, p: u32, order: usize) -> Self {
        let mut positions = Vec::new();
        for diag in 1..n {
            for i in 0..n - diag {
                positions.push((i, i + diag));
            }
        }
        let m = positions.len();
        let weights: Vec<u32> = (0..m as u32).map(|k| p.pow(k)).collect();
        let mut digits = vec![0u8; order * m];
        for id in 0..order {
            let mut rest = id as u32;
            for k in 0..m {
                digits[id * m + k] = (rest % p) as u8;
                rest /= p;
            }
        }
        Unitriangular {
            n,
            p,
            positions,
            weights,
            digits,
        }
    }

    fn load(&self, a: Elem) -> [[u32; MAX_UT_DIM]; MAX_UT_DIM] {
        let m = self.positions.len();
        let mut out = [[0u32; MAX_UT_DIM]; MAX_UT_DIM];
        let d = &self.digits[a as usize * m..a as usize * m + m];
        for (k, &(i, j)) in self.positions.iter().enumerate() {
            out[i][j] = d[k] as u32;
        }
        out
    }

    /// Id of the matrix with the given strictly-upper entries (row, col, value).
    pub(crate) fn encode(&self, entries: &[(usize, usize, u32)]) -> Elem {
        let mut acc = 0;
        for &(i, j, v) in entries {
            let k = self
                .positions
                .iter()
                .position(|&pos| pos == (i, j))
                .expect("strictly upper position");
            acc += (v % self.p) * self.weights[k];
        }
        acc
    }

    #[inline]
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        let x = self.load(a);
        let y = self.load(b);
        let mut acc = 0;
        for (k, &(i, j)) in self.positions.iter().enumerate() {
            let mut c = x[i][j] + y[i][j];
            for l in i + 1..j {
                c += x[i][l] * y[l][j];
            }
            acc += (c % self.p) * self.weights[k];
        }
        acc
    }
}

/// Cyclic-by-abelian extension: ids `j * |N| + v` encode `y^j v`.
#[derive(Debug)]
pub(crate) struct Extension {
    pub(crate) p: u32,
    pub(crate) kernel: MixedRadix,
    /// `act[j * |N| + v]` is `alpha^j(v)`.
    pub(crate) act: Vec<Elem>,
    pub(crate) z: Elem,
}

impl Extension {
    #[inline]
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        let n = self.kernel.order() as Elem;
        let (j1, v1) = (a / n, a % n);
        let (j2, v2) = (b / n, b % n);
        let mut v = self.kernel.add(self.act[(j2 * n + v1) as usize], v2);
        let mut j = j1 + j2;
        if j >= self.p {
            j -= self.p;
            v = self.kernel.add(v, self.z);
        }
        j * n + v
    }

    fn inv(&self, a: Elem) -> Elem {
        let n = self.kernel.order() as Elem;
        let (j, v) = (a / n, a % n);
        if j == 0 {
            return self.kernel.neg(v);
        }
        let jj = self.p - j;
        let w = self.kernel.neg(self.act[(jj * n + v) as usize]);
        jj * n + self.kernel.add(w, self.kernel.neg(self.z))
    }
}

/// Direct product with mixed-radix encoding over the factor orders
/// (first factor least significant).
#[derive(Debug)]
pub(crate) struct Product {
    pub(crate) factors: Vec<FiniteGroup>,
    weights: Vec<u32>,
}

impl Product {
    pub(crate) fn new(factors: Vec<FiniteGroup>) -> Self {
        let mut weights = Vec::with_capacity(factors.len());
        let mut w = 1u32;
        for f in &factors {
            weights.push(w);
            w *= f.order() as u32;
        }
        Product { factors, weights }
    }

    #[inline]
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        let (mut ra, mut rb, mut acc) = (a, b, 0);
        for (f, &w) in self.factors.iter().zip(&self.weights) {
            let n = f.order() as Elem;
            acc += f.mul(ra % n, rb % n) * w;
            ra /= n;
            rb /= n;
        }
        acc
    }

    fn inv(&self, a: Elem) -> Elem {
        let (mut ra, mut acc) = (a, 0);
        for (f, &w) in self.factors.iter().zip(&self.weights) {
            let n = f.order() as Elem;
            acc += f.inv(ra % n) * w;
            ra /= n;
        }
        acc
    }
}

/// Coset group `G/N` with the smallest id of each coset as representative.
#[derive(Debug)]
pub(crate) struct Quotient {
    pub(crate) parent: FiniteGroup,
    pub(crate) coset_of: Vec<Elem>,
    pub(crate) reps: Vec<Elem>,
}

impl Quotient {
    #[inline]
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.coset_of[self
            .parent
            .mul(self.reps[a as usize], self.reps[b as usize]) as usize]
    }
}
