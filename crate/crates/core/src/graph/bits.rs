//! Helpers for `u128` vertex sets.

/// A set of vertex ids in `0..128`.
pub type VertexSet = u128;

#[inline]
pub fn bit(v: usize) -> VertexSet {
    1u128 << v
}

/// Mask with the low `n` bits set.
#[inline]
pub fn full(n: usize) -> VertexSet {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

#[inline]
pub fn count(s: VertexSet) -> usize {
    s.count_ones() as usize
}

#[inline]
pub fn first(s: VertexSet) -> Option<usize> {
    if s == 0 {
        None
    } else {
        Some(s.trailing_zeros() as usize)
    }
}

/// Iterates the members of a set in increasing order.
#[derive(Debug, Clone, Copy)]
pub struct Members(VertexSet);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = count(self.0);
        (c, Some(c))
    }
}

impl ExactSizeIterator for Members {}

#[inline]
pub fn members(s: VertexSet) -> Members {
    Members(s)
}

pub fn from_slice(vs: &[usize]) -> VertexSet {
    vs.iter().fold(0, |acc, &v| acc | bit(v))
}

pub fn to_vec(s: VertexSet) -> Vec<usize> {
    members(s).collect()
}
