use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// An element of N^k.
///
/// The derived `Ord` is lexicographic and exists only so degrees can key
/// ordered maps; the componentwise partial order is [`Degree::le`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Degree(Vec<u32>);

impl Degree {
    pub fn zero(rank: usize) -> Self {
        Degree(vec![0; rank])
    }

    /// The generator `e_i` of N^k, with `color` 1-based.
    pub fn unit(rank: usize, color: usize) -> Self {
        let mut d = Self::zero(rank);
        d.0[color - 1] = 1;
        d
    }

    pub fn from_vec(coords: Vec<u32>) -> Self {
        Degree(coords)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    /// Coordinate for a 1-based color.
    pub fn get(&self, color: usize) -> u32 {
        self.0[color - 1]
    }

    pub(crate) fn coord0(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub(crate) fn coord0_mut(&mut self, i: usize) -> &mut u32 {
        &mut self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Total length |n| = n_1 + ... + n_k.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Degree) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn join(&self, other: &Degree) -> Degree {
        self.zip_with(other, u32::max)
    }

    pub fn meet(&self, other: &Degree) -> Degree {
        self.zip_with(other, u32::min)
    }

    pub fn add(&self, other: &Degree) -> Degree {
        self.zip_with(other, |a, b| a + b)
    }

    /// `self - other`, saturating at zero in every coordinate; this is
    /// `(self - other) ∨ 0`.
    pub fn saturating_sub(&self, other: &Degree) -> Degree {
        self.zip_with(other, u32::saturating_sub)
    }

    /// `self - other`, defined only when `other <= self`.
    pub fn checked_sub(&self, other: &Degree) -> Option<Degree> {
        other.le(self).then(|| self.saturating_sub(other))
    }

    /// Color sequence of a color-sorted path of this degree (0-based colors).
    pub(crate) fn sorted_colors(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &n)| std::iter::repeat_n(i, n as usize))
            .collect()
    }

    /// All `m` with `0 <= m <= self`, lexicographic.
    pub fn box_below(&self) -> Vec<Degree> {
        self.box_between(&Degree::zero(self.rank()))
    }

    /// All `m` with `lower <= m <= self`, lexicographic.
    pub fn box_between(&self, lower: &Degree) -> Vec<Degree> {
        let mut out = vec![Vec::with_capacity(self.rank())];
        for i in 0..self.rank() {
            let mut next = Vec::new();
            for prefix in &out {
                for c in lower.0[i]..=self.0[i] {
                    let mut p = prefix.clone();
                    p.push(c);
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter().map(Degree).collect()
    }

    fn zip_with(&self, other: &Degree, f: impl Fn(u32, u32) -> u32) -> Degree {
        debug_assert_eq!(self.rank(), other.rank());
        Degree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        )
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Parses `1,1`, `(1,1)` or `3`.
impl FromStr for Degree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        if inner.trim().is_empty() {
            return Err(Error::MalformedDegree(s.to_string()));
        }
        inner
            .split(',')
            .map(|c| c.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map(Degree)
            .map_err(|_| Error::MalformedDegree(s.to_string()))
    }
}
