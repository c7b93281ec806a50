//! Exhaustive GF(2) search, written on bit-packed column vectors so it shares no
//! code with the elimination routines it is used to check.

use crate::abcat::LinMap;
use crate::cospan::Cospan;
use crate::exactlin::{Field, Matrix};

/// A GF(2) linear map `k^src -> k^dst` with `src, dst <= 8`; column `i` is the image of `e_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bits {
    pub src: u8,
    pub dst: u8,
    pub cols: [u8; 8],
}

impl Bits {
    pub fn zero(src: u8, dst: u8) -> Bits {
        Bits {
            src,
            dst,
            cols: [0; 8],
        }
    }

    /// The standard inclusion of the first `src` coordinates.
    pub fn inclusion(src: u8, dst: u8) -> Bits {
        let mut b = Bits::zero(src, dst);
        for i in 0..src as usize {
            b.cols[i] = 1 << i;
        }
        b
    }

    pub fn apply(&self, x: u8) -> u8 {
        let mut y = 0;
        for i in 0..self.src as usize {
            if x & (1 << i) != 0 {
                y ^= self.cols[i];
            }
        }
        y
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &Bits) -> Bits {
        let mut out = Bits::zero(f.src, self.dst);
        for i in 0..f.src as usize {
            out.cols[i] = self.apply(f.cols[i]);
        }
        out
    }

    pub fn is_mono(&self) -> bool {
        (1u16..(1u16 << self.src)).all(|x| self.apply(x as u8) != 0)
    }

    /// Every map `k^src -> k^dst`, in a fixed order.
    pub fn all(src: u8, dst: u8) -> impl Iterator<Item = Bits> {
        let total = 1u64 << (src as u32 * dst as u32);
        let mask = ((1u16 << dst) - 1) as u64;
        (0..total).map(move |t| {
            let mut b = Bits::zero(src, dst);
            for i in 0..src as usize {
                b.cols[i] = ((t >> (i * dst as usize)) & mask) as u8;
            }
            b
        })
    }

    /// Side-by-side `[self | other]`.
    pub fn hjoin(&self, other: &Bits) -> Bits {
        debug_assert_eq!(self.dst, other.dst);
        let mut b = Bits::zero(self.src + other.src, self.dst);
        b.cols[..self.src as usize].copy_from_slice(&self.cols[..self.src as usize]);
        b.cols[self.src as usize..(self.src + other.src) as usize]
            .copy_from_slice(&other.cols[..other.src as usize]);
        b
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_i64_fn(Field::GF2, self.dst as usize, self.src as usize, |r, c| {
            ((self.cols[c] >> r) & 1) as i64
        })
    }

    pub fn to_linmap(&self) -> LinMap {
        LinMap::from_matrix(self.to_matrix())
    }
}

/// A GF(2) cospan in bit form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BitCospan {
    pub f0: Bits,
    pub f1: Bits,
}

impl BitCospan {
    pub fn bulk(&self) -> u8 {
        self.f0.dst
    }

    pub fn to_cospan(&self) -> Cospan {
        Cospan::new(self.f0.to_linmap(), self.f1.to_linmap()).expect("shared bulk")
    }

    /// Every cospan with the given feet and bulk.
    pub fn all(a0: u8, a1: u8, b: u8) -> impl Iterator<Item = BitCospan> {
        Bits::all(a0, b).flat_map(move |f0| Bits::all(a1, b).map(move |f1| BitCospan { f0, f1 }))
    }
}

/// Is there a mono `g : B -> B'` carrying both legs of `l` onto those of `m`?
pub fn brute_leq(l: &BitCospan, m: &BitCospan) -> bool {
    Bits::all(l.bulk(), m.bulk())
        .any(|g| g.is_mono() && g.after(&l.f0) == m.f0 && g.after(&l.f1) == m.f1)
}

/// Is there a space `W` of dimension at most `max_w` with monos `B -> W <- B'` making
/// both legs agree?
///
/// Any mono `B -> W` can be moved to the standard inclusion by an automorphism of `W`,
/// so it suffices to search over the second mono.
pub fn brute_upper_bound(l: &BitCospan, m: &BitCospan, max_w: u8) -> bool {
    let lo = l.bulk().max(m.bulk());
    (lo..=max_w).any(|w| {
        let g = Bits::inclusion(l.bulk(), w);
        let (t0, t1) = (g.after(&l.f0), g.after(&l.f1));
        Bits::all(m.bulk(), w).any(|gm| gm.is_mono() && gm.after(&m.f0) == t0 && gm.after(&m.f1) == t1)
    })
}

/// Is there a cospan with monos into both bulks through which both legs factor?
pub fn brute_lower_bound(l: &BitCospan, m: &BitCospan) -> bool {
    let hi = l.bulk().min(m.bulk());
    (0..=hi).any(|b0| {
        Bits::all(b0, l.bulk()).filter(Bits::is_mono).any(|ml| {
            let h0 = Bits::all(l.f0.src, b0).find(|h| ml.after(h) == l.f0);
            let h1 = Bits::all(l.f1.src, b0).find(|h| ml.after(h) == l.f1);
            let (Some(h0), Some(h1)) = (h0, h1) else {
                return false;
            };
            Bits::all(b0, m.bulk())
                .any(|mm| mm.is_mono() && mm.after(&h0) == m.f0 && mm.after(&h1) == m.f1)
        })
    })
}

/// A commuting-or-not square `f : A -> B`, `f' : A -> C`, `g : B -> D`, `g' : C -> D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BitSquare {
    pub f: Bits,
    pub f_prime: Bits,
    pub g: Bits,
    pub g_prime: Bits,
}

impl BitSquare {
    pub fn commutes(&self) -> bool {
        self.g.after(&self.f) == self.g_prime.after(&self.f_prime)
    }

    /// Every vector of `B ⊕ C` killed by `[g | g']` is `(f x, -f' x)` for some `x`.
    pub fn brute_middle_exact(&self) -> bool {
        let b = self.f.dst;
        let c = self.f_prime.dst;
        let v = self.g.hjoin(&self.g_prime);
        let image: Vec<u8> = (0u16..(1u16 << self.f.src))
            .map(|x| self.f.apply(x as u8) | (self.f_prime.apply(x as u8) << b))
            .collect();
        (0u16..(1u16 << (b + c))).all(|y| v.apply(y as u8) != 0 || image.contains(&(y as u8)))
    }
}

/// Every commuting square with all four dimensions at most `max_dim`, in a fixed order.
pub fn all_commuting_squares(max_dim: u8) -> impl Iterator<Item = BitSquare> {
    let dims = move || 0..=max_dim;
    dims().flat_map(move |a| {
        dims().flat_map(move |b| {
            dims().flat_map(move |c| {
                dims().flat_map(move |d| {
                    Bits::all(a, b).flat_map(move |f| {
                        Bits::all(a, c).flat_map(move |fp| {
                            Bits::all(b, d).flat_map(move |g| {
                                Bits::all(c, d).filter_map(move |gp| {
                                    let sq = BitSquare {
                                        f,
                                        f_prime: fp,
                                        g,
                                        g_prime: gp,
                                    };
                                    sq.commutes().then_some(sq)
                                })
                            })
                        })
                    })
                })
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(Bits::all(2, 2).count(), 16);
        assert_eq!(Bits::all(2, 2).filter(Bits::is_mono).count(), 6);
        assert_eq!(Bits::all(0, 3).count(), 1);
        assert_eq!(Bits::all(2, 0).count(), 1);
    }

    #[test]
    fn bit_maps_match_matrices() {
        let a = Bits {
            src: 2,
            dst: 2,
            cols: [0b01, 0b11, 0, 0, 0, 0, 0, 0],
        };
        assert_eq!(a.to_matrix(), Matrix::from_rows(Field::GF2, &[&[1, 1], &[0, 1]]));
        assert_eq!(a.after(&a).to_matrix(), a.to_matrix().mul(&a.to_matrix()).unwrap());
    }

    #[test]
    fn small_bounds() {
        let id = BitCospan {
            f0: Bits::inclusion(1, 1),
            f1: Bits::inclusion(1, 1),
        };
        let wide = BitCospan {
            f0: Bits::inclusion(1, 2),
            f1: Bits::inclusion(1, 2),
        };
        let split = BitCospan {
            f0: Bits::inclusion(1, 1),
            f1: Bits::zero(1, 1),
        };
        assert!(brute_leq(&id, &wide));
        assert!(!brute_leq(&wide, &id));
        assert!(brute_upper_bound(&id, &wide, 4));
        assert!(brute_lower_bound(&id, &wide));
        assert!(!brute_upper_bound(&id, &split, 4));
        assert!(!brute_lower_bound(&id, &split));
    }
}
