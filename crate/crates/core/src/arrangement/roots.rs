use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Arrangement, ArrangementKind, DEFAULT_RANK_CEILING};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Simply-laced Dynkin type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoxeterType {
    A,
    D,
    E,
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            CoxeterType::A => "A",
            CoxeterType::D => "D",
            CoxeterType::E => "E",
        };
        f.write_str(c)
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(CoxeterType::A),
            "D" | "d" => Ok(CoxeterType::D),
            "E" | "e" => Ok(CoxeterType::E),
            _ => Err(Error::validation(format!("unsupported Coxeter type {s:?} (expected A, D or E)"))),
        }
    }
}

/// Cartan matrix in Bourbaki numbering.
pub fn cartan_matrix(ty: CoxeterType, rank: usize) -> Result<Matrix> {
    let edges: Vec<(usize, usize)> = match ty {
        CoxeterType::A if rank >= 1 => (1..rank).map(|i| (i - 1, i)).collect(),
        CoxeterType::D if rank >= 4 => {
            let mut e: Vec<_> = (1..rank - 1).map(|i| (i - 1, i)).collect();
            e.push((rank - 3, rank - 1));
            e
        }
        CoxeterType::E if (6..=8).contains(&rank) => {
            let mut e = vec![(0, 2), (1, 3)];
            e.extend((3..rank).map(|i| (i - 1, i)));
            e
        }
        _ => return Err(Error::validation(format!("{ty}{rank} is not a valid ADE type"))),
    };
    let mut c = Matrix::identity(rank);
    for i in 0..rank {
        c.set(i, i, 2);
    }
    for (i, j) in edges {
        c.set(i, j, -1);
        c.set(j, i, -1);
    }
    Ok(c)
}

/// Positive roots in the simple-root basis, sorted by height and then in
/// decreasing lexicographic order (so the simple roots come first, in order).
///
/// Uses the simply-laced string rule: for a positive root `b` other than
/// `a_i`, `b + a_i` is a root iff `(b, a_i) = -1`.
pub fn positive_roots(cartan: &Matrix) -> Vec<Vec<i64>> {
    let n = cartan.nrows();
    let simple: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut roots: BTreeSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut queue: VecDeque<Vec<i64>> = simple.into_iter().collect();
    while let Some(b) = queue.pop_front() {
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| b[j] * cartan.get(j, i)).sum();
            if pairing == -1 {
                let mut c = b.clone();
                c[i] += 1;
                if roots.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
    }
    let mut out: Vec<_> = roots.into_iter().collect();
    out.sort_by(|a, b| {
        let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    out
}

pub fn build_coxeter_arrangement(ty: CoxeterType, rank: usize) -> Result<Arrangement> {
    build_coxeter_arrangement_with_ceiling(ty, rank, DEFAULT_RANK_CEILING)
}

/// The reflection arrangement of an ADE root system. Hyperplanes are the
/// positive roots read as linear forms on the coweight coordinates, so the
/// fundamental chamber is literally the positive orthant.
pub fn build_coxeter_arrangement_with_ceiling(ty: CoxeterType, rank: usize, ceiling: usize) -> Result<Arrangement> {
    if rank > ceiling {
        return Err(Error::validation(format!("rank {rank} exceeds the configured ceiling {ceiling}")));
    }
    let cartan = cartan_matrix(ty, rank)?;
    Arrangement::new(rank, &positive_roots(&cartan), ArrangementKind::Coxeter { ty, rank })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: the positive roots of a simply-laced finite root
    /// system are the nonnegative lattice vectors of norm 2.
    fn norm_two_vectors(cartan: &Matrix, bound: i64) -> BTreeSet<Vec<i64>> {
        let n = cartan.nrows();
        let mut out = BTreeSet::new();
        let mut v = vec![0i64; n];
        loop {
            let norm: i64 = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| v[i] * cartan.get(i, j) * v[j])
                .sum();
            if norm == 2 {
                out.insert(v.clone());
            }
            let mut k = 0;
            loop {
                if k == n {
                    return out;
                }
                v[k] += 1;
                if v[k] <= bound {
                    break;
                }
                v[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn root_counts_match_norm_oracle() {
        for (ty, rank, count) in [
            (CoxeterType::A, 1, 1),
            (CoxeterType::A, 2, 3),
            (CoxeterType::A, 3, 6),
            (CoxeterType::D, 4, 12),
            (CoxeterType::D, 5, 20),
            (CoxeterType::E, 6, 36),
        ] {
            let c = cartan_matrix(ty, rank).unwrap();
            let roots = positive_roots(&c);
            assert_eq!(roots.len(), count, "{ty}{rank}");
            let oracle = norm_two_vectors(&c, 3);
            assert_eq!(roots.iter().cloned().collect::<BTreeSet<_>>(), oracle, "{ty}{rank}");
        }
    }

    #[test]
    fn a2_closure_of_simple_roots() {
        let roots = positive_roots(&cartan_matrix(CoxeterType::A, 2).unwrap());
        assert_eq!(roots, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn e8_highest_root() {
        let roots = positive_roots(&cartan_matrix(CoxeterType::E, 8).unwrap());
        assert_eq!(roots.len(), 120);
        assert_eq!(roots.last().unwrap(), &vec![2, 3, 4, 6, 5, 4, 3, 2]);
    }

    #[test]
    fn invalid_types() {
        assert!(cartan_matrix(CoxeterType::D, 3).is_err());
        assert!(cartan_matrix(CoxeterType::E, 5).is_err());
        assert!(cartan_matrix(CoxeterType::A, 0).is_err());
        assert!(build_coxeter_arrangement(CoxeterType::E, 6).is_err());
        assert!(build_coxeter_arrangement_with_ceiling(CoxeterType::E, 6, 6).is_ok());
        assert!("B".parse::<CoxeterType>().is_err());
    }

    #[test]
    fn small_arrangements() {
        assert_eq!(build_coxeter_arrangement(CoxeterType::A, 1).unwrap().len(), 1);
        assert_eq!(build_coxeter_arrangement(CoxeterType::A, 2).unwrap().len(), 3);
        assert_eq!(build_coxeter_arrangement(CoxeterType::D, 4).unwrap().len(), 12);
    }
}
