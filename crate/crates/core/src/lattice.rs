//! Periodic tori and displacement boxes.
//!
//! Sites of a [`TorusLattice`] are flat row-major indices with the first axis
//! varying slowest. Neighbor slot `2 i` holds the `+e_i` neighbor and slot
//! `2 i + 1` the `-e_i` neighbor; [`DisplacementBox`] uses the same slot order.

use crate::error::{invalid, Result};

/// `Z^d` wrapped to `(Z / L Z)^d` with `L` even and at least 4.
#[derive(Debug, Clone)]
pub struct TorusLattice {
    dim: usize,
    side: usize,
    sites: usize,
    strides: Vec<usize>,
    neighbor_table: Vec<u32>,
}

impl TorusLattice {
    pub fn new(dim: usize, side: usize) -> Result<Self> {
        if dim == 0 {
            return Err(invalid("lattice dimension must be at least 1"));
        }
        if side < 4 || !side.is_multiple_of(2) {
            return Err(invalid(format!("torus side must be even and >= 4, got {side}")));
        }
        let sites = side
            .checked_pow(dim as u32)
            .filter(|&n| n <= u32::MAX as usize)
            .ok_or_else(|| invalid(format!("torus {side}^{dim} has too many sites")))?;

        let mut strides = vec![1usize; dim];
        for axis in (0..dim.saturating_sub(1)).rev() {
            strides[axis] = strides[axis + 1] * side;
        }

        let mut lattice = Self {
            dim,
            side,
            sites,
            strides,
            neighbor_table: Vec::new(),
        };
        let mut table = Vec::with_capacity(sites * 2 * dim);
        for site in 0..sites {
            for axis in 0..dim {
                let c = (site / lattice.strides[axis]) % side;
                let base = site - c * lattice.strides[axis];
                let up = (c + 1) % side;
                let down = (c + side - 1) % side;
                table.push((base + up * lattice.strides[axis]) as u32);
                table.push((base + down * lattice.strides[axis]) as u32);
            }
        }
        lattice.neighbor_table = table;
        Ok(lattice)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn num_sites(&self) -> usize {
        self.sites
    }

    /// Number of neighbors per site, `2d`.
    pub fn degree(&self) -> usize {
        2 * self.dim
    }

    /// The `2d` neighbors of `site`, in slot order `+e_1, -e_1, +e_2, ...`.
    pub fn neighbors(&self, site: usize) -> Result<&[u32]> {
        if site >= self.sites {
            return Err(invalid(format!("site {site} out of range [0, {})", self.sites)));
        }
        Ok(self.neighbors_unchecked(site))
    }

    #[inline]
    pub(crate) fn neighbors_unchecked(&self, site: usize) -> &[u32] {
        let deg = 2 * self.dim;
        &self.neighbor_table[site * deg..(site + 1) * deg]
    }

    #[inline]
    pub(crate) fn neighbor(&self, site: usize, slot: usize) -> usize {
        self.neighbor_table[site * 2 * self.dim + slot] as usize
    }

    pub fn coords(&self, site: usize) -> Result<Vec<usize>> {
        if site >= self.sites {
            return Err(invalid(format!("site {site} out of range [0, {})", self.sites)));
        }
        Ok(self.strides.iter().map(|s| (site / s) % self.side).collect())
    }

    pub fn index(&self, coords: &[usize]) -> Result<usize> {
        if coords.len() != self.dim {
            return Err(invalid(format!(
                "expected {} coordinates, got {}",
                self.dim,
                coords.len()
            )));
        }
        if let Some(c) = coords.iter().find(|&&c| c >= self.side) {
            return Err(invalid(format!("coordinate {c} outside [0, {})", self.side)));
        }
        Ok(coords.iter().zip(&self.strides).map(|(c, s)| c * s).sum())
    }

    /// The site `site + displacement` with periodic wrap.
    pub fn translate(&self, site: usize, displacement: &[i64]) -> usize {
        debug_assert_eq!(displacement.len(), self.dim);
        let side = self.side as i64;
        let mut out = 0;
        for (axis, &dx) in displacement.iter().enumerate() {
            let c = ((site / self.strides[axis]) % self.side) as i64;
            let wrapped = (c + dx).rem_euclid(side) as usize;
            out += wrapped * self.strides[axis];
        }
        out
    }
}

/// A displacement in `Z^d` together with its box metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxSite {
    pub displacement: Vec<i64>,
    /// Some coordinate has magnitude equal to the radius.
    pub boundary: bool,
}

/// The displacements `x` with `max_i |x_i| <= R`.
#[derive(Debug, Clone)]
pub struct DisplacementBox {
    dim: usize,
    radius: usize,
    width: usize,
    len: usize,
    strides: Vec<usize>,
    neighbor_table: Vec<u32>,
}

const OUTSIDE: u32 = u32::MAX;

impl DisplacementBox {
    pub fn new(dim: usize, radius: usize) -> Result<Self> {
        if dim == 0 {
            return Err(invalid("box dimension must be at least 1"));
        }
        if radius == 0 {
            return Err(invalid("box radius must be at least 1"));
        }
        let width = 2 * radius + 1;
        let len = width
            .checked_pow(dim as u32)
            .filter(|&n| n < OUTSIDE as usize)
            .ok_or_else(|| invalid(format!("box of radius {radius} in d = {dim} is too large")))?;
        let mut strides = vec![1usize; dim];
        for axis in (0..dim.saturating_sub(1)).rev() {
            strides[axis] = strides[axis + 1] * width;
        }
        let mut table = Vec::with_capacity(len * 2 * dim);
        for idx in 0..len {
            for &stride in &strides {
                let c = (idx / stride) % width;
                table.push(if c + 1 < width { (idx + stride) as u32 } else { OUTSIDE });
                table.push(if c > 0 { (idx - stride) as u32 } else { OUTSIDE });
            }
        }
        Ok(Self {
            dim,
            radius,
            width,
            len,
            strides,
            neighbor_table: table,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn displacement(&self, idx: usize) -> Vec<i64> {
        self.strides
            .iter()
            .map(|s| ((idx / s) % self.width) as i64 - self.radius as i64)
            .collect()
    }

    pub fn index_of(&self, displacement: &[i64]) -> Option<usize> {
        if displacement.len() != self.dim {
            return None;
        }
        let r = self.radius as i64;
        displacement.iter().zip(&self.strides).try_fold(0usize, |acc, (&x, &s)| {
            (x.abs() <= r).then(|| acc + (x + r) as usize * s)
        })
    }

    pub fn origin(&self) -> usize {
        self.strides.iter().map(|s| s * self.radius).sum()
    }

    /// Index of `sign * e_axis`.
    pub fn unit(&self, axis: usize, positive: bool) -> usize {
        let o = self.origin();
        if positive {
            o + self.strides[axis]
        } else {
            o - self.strides[axis]
        }
    }

    pub fn is_boundary(&self, idx: usize) -> bool {
        self.strides.iter().any(|s| {
            let c = (idx / s) % self.width;
            c == 0 || c + 1 == self.width
        })
    }

    /// Neighbor of `idx` in slot order, or `None` if it leaves the box.
    #[inline]
    pub fn neighbor(&self, idx: usize, slot: usize) -> Option<usize> {
        let n = self.neighbor_table[idx * 2 * self.dim + slot];
        (n != OUTSIDE).then_some(n as usize)
    }

    /// Index of `-x` for the displacement at `idx`.
    pub fn negated(&self, idx: usize) -> usize {
        self.len - 1 - idx
    }

    /// Each displacement once, in index order, with its boundary flag.
    pub fn sites(&self) -> impl Iterator<Item = BoxSite> + '_ {
        (0..self.len).map(move |idx| BoxSite {
            displacement: self.displacement(idx),
            boundary: self.is_boundary(idx),
        })
    }
}

pub fn l1_norm(x: &[i64]) -> i64 {
    x.iter().map(|c| c.abs()).sum()
}

/// Sorted absolute coordinates; constant on orbits of the hyperoctahedral group.
pub fn canonical_key(x: &[i64]) -> Vec<u64> {
    let mut key: Vec<u64> = x.iter().map(|c| c.unsigned_abs()).collect();
    key.sort_unstable();
    key
}
