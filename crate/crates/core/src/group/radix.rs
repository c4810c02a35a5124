use crate::Elem;

/// Mixed-radix encoding of a finite abelian group `Z/m_0 + ... + Z/m_{r-1}`.
///
/// Element ids are `sum c_i * w_i` with `w_0 = 1`, so the zero tuple is id 0.
#[derive(Debug, Clone)]
pub(crate) struct MixedRadix {
    moduli: Vec<u32>,
    weights: Vec<u32>,
    order: usize,
    digits: Vec<u32>,
}

impl MixedRadix {
    /// Caller guarantees the product of `moduli` fits within the hard order cap.
    pub(crate) fn new(moduli: &[u32]) -> Self {
        let mut weights = Vec::with_capacity(moduli.len());
        let mut order = 1usize;
        for &m in moduli {
            weights.push(order as u32);
            order *= m as usize;
        }
        let r = moduli.len();
        let mut digits = vec![0u32; order * r];
        for id in 0..order {
            let mut rest = id as u32;
            for (k, &m) in moduli.iter().enumerate() {
                digits[id * r + k] = rest % m;
                rest /= m;
            }
        }
        MixedRadix {
            moduli: moduli.to_vec(),
            weights,
            order,
            digits,
        }
    }

    pub(crate) fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub(crate) fn coords(&self, a: Elem) -> &[u32] {
        let r = self.moduli.len();
        &self.digits[a as usize * r..(a as usize + 1) * r]
    }

    /// Encodes an integer vector, reducing each coordinate modulo its modulus.
    pub(crate) fn encode(&self, coords: &[i64]) -> Elem {
        debug_assert_eq!(coords.len(), self.moduli.len());
        coords
            .iter()
            .zip(&self.moduli)
            .zip(&self.weights)
            .map(|((&c, &m), &w)| c.rem_euclid(m as i64) as u32 * w)
            .sum()
    }

    #[inline]
    pub(crate) fn add(&self, a: Elem, b: Elem) -> Elem {
        let r = self.moduli.len();
        let da = &self.digits[a as usize * r..a as usize * r + r];
        let db = &self.digits[b as usize * r..b as usize * r + r];
        let mut acc = 0;
        for k in 0..r {
            let mut s = da[k] + db[k];
            if s >= self.moduli[k] {
                s -= self.moduli[k];
            }
            acc += s * self.weights[k];
        }
        acc
    }

    #[inline]
    pub(crate) fn neg(&self, a: Elem) -> Elem {
        let r = self.moduli.len();
        let da = &self.digits[a as usize * r..a as usize * r + r];
        let mut acc = 0;
        for k in 0..r {
            if da[k] != 0 {
                acc += (self.moduli[k] - da[k]) * self.weights[k];
            }
        }
        acc
    }

    /// `n * a` for a non-negative multiplier.
    pub(crate) fn scale(&self, a: Elem, n: u64) -> Elem {
        self.coords(a)
            .iter()
            .zip(&self.moduli)
            .zip(&self.weights)
            .map(|((&c, &m), &w)| ((c as u64 * (n % m as u64)) % m as u64) as u32 * w)
            .sum()
    }
}
