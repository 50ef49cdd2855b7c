//! Per-vertex sets of free colors (used at most once) and unused colors.

use std::collections::BTreeSet;

/// Colors 1..=k are kept in `u64` masks up to this many colors.
pub(crate) const MASK_COLORS: u32 = 64;

#[derive(Clone, Copy, Default)]
pub(crate) struct MaskPool {
    pub(crate) free: u64,
    pub(crate) zero: u64,
}

/// Pool for large palettes.
///
/// Only colors up to `cap` are tracked. The cap grows with the colored degree
/// so the smallest free and smallest unused color always lie below it.
#[derive(Clone, Default)]
pub(crate) struct WidePool {
    pub(crate) cap: u32,
    pub(crate) free: BTreeSet<u32>,
    pub(crate) zero: BTreeSet<u32>,
}

pub(crate) enum Pools {
    Mask(Vec<MaskPool>),
    Wide(Vec<WidePool>),
}

impl Pools {
    pub(crate) fn new(n: usize, k: u32) -> Self {
        if k <= MASK_COLORS {
            let all = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
            Pools::Mask(vec![
                MaskPool {
                    free: all,
                    zero: all,
                };
                n
            ])
        } else {
            Pools::Wide(vec![WidePool::default(); n])
        }
    }

    /// Records the new multiplicity of color `c` at vertex `v`.
    pub(crate) fn set_count(&mut self, v: u32, c: u32, count: u8) {
        match self {
            Pools::Mask(pools) => {
                let p = &mut pools[v as usize];
                let bit = 1u64 << (c - 1);
                if count <= 1 {
                    p.free |= bit;
                } else {
                    p.free &= !bit;
                }
                if count == 0 {
                    p.zero |= bit;
                } else {
                    p.zero &= !bit;
                }
            }
            Pools::Wide(pools) => {
                let p = &mut pools[v as usize];
                if c > p.cap {
                    return;
                }
                if count <= 1 {
                    p.free.insert(c);
                } else {
                    p.free.remove(&c);
                }
                if count == 0 {
                    p.zero.insert(c);
                } else {
                    p.zero.remove(&c);
                }
            }
        }
    }

    /// Extends the tracked range of a wide pool to `new_cap` colors.
    pub(crate) fn grow(&mut self, v: u32, new_cap: u32, count: impl Fn(u32) -> u8) {
        if let Pools::Wide(pools) = self {
            let p = &mut pools[v as usize];
            while p.cap < new_cap {
                p.cap += 1;
                let c = p.cap;
                let n = count(c);
                if n <= 1 {
                    p.free.insert(c);
                }
                if n == 0 {
                    p.zero.insert(c);
                }
            }
        }
    }
}
