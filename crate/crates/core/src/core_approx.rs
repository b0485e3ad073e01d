//! Finite-dimensional pieces of the core: `ΠE`, the sets `T(n, v)`, the
//! support of the matrix units `Θ(λ, µ)`, the gauge expectation on formal
//! sums, and the blocks of `F_n`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_rational::Rational64;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::extension::MinimalPair;
use crate::graph::{KGraph, VertexId};
use crate::path::{canonical, Path};

/// `ΠE`: the smallest superset of `E` such that `λ, µ, σ ∈ ΠE`,
/// `d(λ) = d(µ)`, `s(λ) = s(µ)` and `(α, β) ∈ Λ^min(µ, σ)` give `λα ∈ ΠE`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiClosure {
    pub base: Vec<Path>,
    pub closed: Vec<Path>,
    /// `N = ⋁_{λ∈E} d(λ)`.
    pub degree_bound: Degree,
}

impl PiClosure {
    pub fn contains(&self, p: &Path) -> bool {
        self.closed.binary_search(p).is_ok()
    }

    /// Members grouped by `(degree, source)`, in that order.
    pub fn classes(&self) -> BTreeMap<(Degree, VertexId), Vec<Path>> {
        let mut out: BTreeMap<(Degree, VertexId), Vec<Path>> = BTreeMap::new();
        for p in &self.closed {
            out.entry((p.degree().clone(), p.source()))
                .or_default()
                .push(p.clone());
        }
        out
    }

    /// Members with range `v`.
    pub fn at_range(&self, v: VertexId) -> Vec<Path> {
        self.closed
            .iter()
            .filter(|p| p.range() == v)
            .cloned()
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreBlock {
    pub degree: Degree,
    pub source: VertexId,
    pub members: Vec<Path>,
    pub t_set: Vec<Path>,
    /// A path `ξ ∈ vΛ` with `Λ^min(ξ, ν) = ∅` for all `ν ∈ T`.
    pub extendor: Path,
}

impl CoreBlock {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreBlockReport {
    pub blocks: Vec<CoreBlock>,
    /// Members of `ΠE` whose class has an exhaustive `T`, so `Q_λ = 0`.
    pub vanishing: Vec<Path>,
    pub total_dimension: usize,
}

impl CoreBlockReport {
    pub fn is_vanishing(&self, p: &Path) -> bool {
        self.vanishing.binary_search(p).is_ok()
    }

    pub fn block_of(&self, p: &Path) -> Option<&CoreBlock> {
        self.blocks
            .iter()
            .find(|b| b.degree == *p.degree() && b.source == p.source())
    }
}

/// A finite sum `Σ a_{λ,µ} t_λ t*_µ` with `s(λ) = s(µ)` and rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalCoreElement {
    terms: BTreeMap<(Path, Path), Rational64>,
}

impl FormalCoreElement {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `coeff · t_λ t*_µ`; zero totals are removed.
    pub fn add(&mut self, lambda: Path, mu: Path, coeff: Rational64) -> Result<()> {
        if lambda.source() != mu.source() {
            return Err(Error::Precondition(
                "a core term t_λ t*_µ needs s(λ) = s(µ)".to_string(),
            ));
        }
        let key = (lambda, mu);
        let total = self.terms.get(&key).copied().unwrap_or_default() + coeff;
        if total == Rational64::default() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, total);
        }
        Ok(())
    }

    pub fn terms(&self) -> &BTreeMap<(Path, Path), Rational64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Φ`: keeps exactly the terms with `d(λ) = d(µ)`.
    pub fn gauge_expectation(&self) -> Self {
        FormalCoreElement {
            terms: self
                .terms
                .iter()
                .filter(|((l, m), _)| l.degree() == m.degree())
                .map(|(k, c)| (k.clone(), *c))
                .collect(),
        }
    }

    pub fn scaled(&self, c: Rational64) -> Self {
        let mut out = Self::new();
        for ((l, m), a) in &self.terms {
            out.add(l.clone(), m.clone(), *a * c)
                .expect("sources already match");
        }
        out
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, m), a) in &other.terms {
            out.add(l.clone(), m.clone(), *a)
                .expect("sources already match");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FnBlock {
    pub source: VertexId,
    pub degree: Degree,
    pub members: Vec<Path>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FnReport {
    pub n: Degree,
    pub blocks: Vec<FnBlock>,
    pub dimension: usize,
}

impl KGraph {
    pub fn pi_closure(&self, set: &[Path]) -> Result<PiClosure> {
        let mut bound = Degree::zero(self.rank());
        for p in set {
            if p.degree().rank() != self.rank() {
                return Err(Error::RankMismatch {
                    expected: self.rank(),
                    found: p.degree().rank(),
                });
            }
            bound = bound.join(p.degree());
        }
        let base = canonical(set.iter().cloned());
        let mut closed: BTreeSet<Path> = base.iter().cloned().collect();
        let mut cache: HashMap<(Path, Path), Vec<MinimalPair>> = HashMap::new();
        loop {
            let members: Vec<Path> = closed.iter().cloned().collect();
            let mut classes: BTreeMap<(Degree, VertexId), Vec<&Path>> = BTreeMap::new();
            for p in &members {
                classes
                    .entry((p.degree().clone(), p.source()))
                    .or_default()
                    .push(p);
            }
            let mut added = Vec::new();
            for class in classes.values() {
                for &mu in class {
                    for sigma in &members {
                        let pairs = cache
                            .entry((mu.clone(), sigma.clone()))
                            .or_insert_with(|| self.lambda_min(mu, sigma));
                        for pair in pairs.iter() {
                            for &lambda in class {
                                let ext = self
                                    .compose(lambda, &pair.alpha)
                                    .expect("s(λ) = s(µ) = r(α)");
                                if !closed.contains(&ext) {
                                    added.push(ext);
                                }
                            }
                        }
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            closed.extend(added);
        }
        Ok(PiClosure {
            base,
            closed: closed.into_iter().collect(),
            degree_bound: bound,
        })
    }

    /// `T(λ) = {ν : d(ν) > 0, λν ∈ ΠE}`.
    pub fn t_set_of(&self, pc: &PiClosure, lambda: &Path) -> Vec<Path> {
        let n = lambda.degree();
        canonical(pc.closed.iter().filter_map(|rho| {
            if !n.le(rho.degree()) || rho.degree() == n || rho.range() != lambda.range() {
                return None;
            }
            let (head, tail) = self.factor_at(rho, n);
            (head == *lambda).then_some(tail)
        }))
    }

    /// `T(n, v)`, computed from the first representative of the class.
    pub fn t_extension_set(&self, pc: &PiClosure, n: &Degree, v: VertexId) -> Result<Vec<Path>> {
        let rep = pc
            .closed
            .iter()
            .find(|p| p.degree() == n && p.source() == v)
            .ok_or_else(|| Error::NoRepresentative {
                degree: n.to_string(),
                vertex: self.vertex_name(v).to_string(),
            })?;
        Ok(self.t_set_of(pc, rep))
    }

    /// Splits `ΠE` into blocks of non-vanishing matrix units and the
    /// vanishing remainder, by testing each `T(n, v)` for exhaustiveness.
    pub fn theta_support(&self, pc: &PiClosure) -> Result<CoreBlockReport> {
        let mut blocks = Vec::new();
        let mut vanishing = Vec::new();
        for ((degree, source), members) in pc.classes() {
            let t_set = self.t_set_of(pc, &members[0]);
            let cert = self.is_exhaustive(source, &t_set)?;
            match cert.witness {
                None => vanishing.extend(members),
                Some(extendor) => blocks.push(CoreBlock {
                    degree,
                    source,
                    members,
                    t_set,
                    extendor,
                }),
            }
        }
        vanishing.sort();
        let total_dimension = blocks.iter().map(|b| b.size() * b.size()).sum();
        Ok(CoreBlockReport {
            blocks,
            vanishing,
            total_dimension,
        })
    }

    /// `t_λ t*_µ = Σ_{λν∈ΠE} Θ(λν, µν)`, with vanishing terms dropped.
    pub fn expand_in_theta_basis(
        &self,
        pc: &PiClosure,
        support: &CoreBlockReport,
        lambda: &Path,
        mu: &Path,
    ) -> Result<Vec<(Path, Path)>> {
        if !pc.contains(lambda) || !pc.contains(mu) {
            return Err(Error::Precondition("both paths must lie in ΠE".to_string()));
        }
        if lambda.degree() != mu.degree() || lambda.source() != mu.source() {
            return Err(Error::Precondition(
                "expansion needs d(λ) = d(µ) and s(λ) = s(µ)".to_string(),
            ));
        }
        let mut nus = vec![self.vertex_path(lambda.source())];
        nus.extend(self.t_set_of(pc, lambda));
        let mut out = Vec::new();
        for nu in nus {
            let l = self.compose(lambda, &nu)?;
            let m = self.compose(mu, &nu)?;
            if !support.is_vanishing(&l) {
                out.push((l, m));
            }
        }
        Ok(out)
    }

    /// Blocks of `F_n`, indexed by `(source, degree)`, holding the members of
    /// `Λ^{≤n}` (or of `vΛ^{≤n}` when `range` is given). Empty blocks are omitted.
    pub fn f_n_report(&self, n: &Degree, range: Option<VertexId>) -> Result<FnReport> {
        self.check_rank(n)?;
        let ranges: Vec<VertexId> = match range {
            Some(v) => vec![v],
            None => self.vertices().collect(),
        };
        let mut groups: BTreeMap<(VertexId, Degree), Vec<Path>> = BTreeMap::new();
        for u in ranges {
            for p in self.paths_leq(u, n) {
                groups
                    .entry((p.source(), p.degree().clone()))
                    .or_default()
                    .push(p);
            }
        }
        let blocks: Vec<FnBlock> = groups
            .into_iter()
            .map(|((source, degree), mut members)| {
                members.sort();
                FnBlock {
                    source,
                    degree,
                    members,
                }
            })
            .collect();
        let dimension = blocks.iter().map(|b| b.members.len().pow(2)).sum();
        Ok(FnReport {
            n: n.clone(),
            blocks,
            dimension,
        })
    }
}
