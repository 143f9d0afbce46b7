use super::{cone_rays, lines_of, Arrangement, ArrangementKind};
use crate::error::{Error, Result};
use crate::linalg::{self, dot, Matrix};

/// Restricts `arr` to the flat cut out by the hyperplanes at `flat`.
///
/// The flat gets a saturated integer basis; each hyperplane not containing
/// the flat restricts to a linear form on it, and equal forms are merged.
/// If the positive orthant of that basis is not already a chamber, the basis
/// is changed by the (unimodular) frame of the chamber containing a generic
/// point, which then becomes the new base chamber. The resulting
/// flat-to-ambient map is kept in [`Arrangement::embedding`].
pub fn restrict_to_flat(arr: &Arrangement, flat: &[usize]) -> Result<Arrangement> {
    let n = arr.rank();
    let normals = arr.normals();
    let mut chosen = Vec::with_capacity(flat.len());
    for &i in flat {
        let h = normals
            .get(i)
            .ok_or_else(|| Error::validation(format!("hyperplane index {i} out of range (arrangement has {})", normals.len())))?;
        chosen.push(h.clone());
    }
    let basis = linalg::integer_kernel(&chosen, n);
    let d = basis.len();
    if d == 0 {
        return Err(Error::DegenerateFlat { indices: flat.to_vec() });
    }
    let b = Matrix::from_columns(&basis);
    let bt = b.transpose();

    let mut restricted: Vec<Vec<i64>> = Vec::new();
    for h in &normals {
        let form = bt.mul_vec(h);
        if let Some(p) = linalg::primitive_canonical(&form) {
            if !restricted.contains(&p) {
                restricted.push(p);
            }
        }
    }

    if let Ok(a) = Arrangement::new(d, &restricted, ArrangementKind::Restriction) {
        return Ok(a.with_embedding(b));
    }

    let point = generic_point(&restricted, d);
    let signs: Vec<bool> = restricted.iter().map(|h| dot(h, &point) > 0).collect();
    let lines = lines_of(&restricted, d);
    let mut rays = cone_rays(&restricted, &lines, &signs);
    if rays.len() != d {
        let text: String = signs.iter().map(|&s| if s { '+' } else { '-' }).collect();
        return Err(Error::NotSimplicial { signs: text, rays: rays.len(), rank: d });
    }
    rays.sort();
    let frame = Matrix::from_columns(&rays);
    if frame.det().abs() != 1 {
        return Err(Error::structure(format!("restricted base chamber frame {rays:?} is not unimodular")));
    }
    let ft = frame.transpose();
    let moved: Vec<Vec<i64>> = restricted
        .iter()
        .map(|h| linalg::primitive_canonical(&ft.mul_vec(h)).expect("unimodular change keeps forms nonzero"))
        .collect();
    Ok(Arrangement::new(d, &moved, ArrangementKind::Restriction)?.with_embedding(b.mul(&frame)))
}

/// A point `(1, t, t^2, ...)` off every hyperplane; a nonzero form of degree
/// below `d` in `t` has fewer than `d` roots, so a small `t` always works.
fn generic_point(normals: &[Vec<i64>], d: usize) -> Vec<i64> {
    (1i64..)
        .map(|t| (0..d as u32).map(|k| t.pow(k)).collect::<Vec<_>>())
        .find(|p| normals.iter().all(|h| dot(h, p) != 0))
        .expect("some moment-curve point avoids finitely many hyperplanes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{build_coxeter_arrangement, cd4_arrangement, is_simplicial, CoxeterType, Fan};
    use std::collections::BTreeSet;

    /// Brute-force oracle: restrict each normal to the flat by projecting
    /// onto a rational basis of it and count distinct lines of forms.
    fn restricted_count_oracle(normals: &[Vec<i64>], flat: &[usize], n: usize) -> usize {
        let chosen: Vec<Vec<i64>> = flat.iter().map(|&i| normals[i].clone()).collect();
        // any kernel basis over Q works for counting distinct forms
        let basis = linalg::integer_kernel(&chosen, n);
        let mut forms = BTreeSet::new();
        for h in normals {
            let f: Vec<i64> = basis.iter().map(|v| dot(h, v)).collect();
            if let Some(p) = linalg::primitive_canonical(&f) {
                forms.insert(p);
            }
        }
        forms.len()
    }

    #[test]
    fn empty_flat_is_identity() {
        let arr = build_coxeter_arrangement(CoxeterType::A, 3).unwrap();
        let r = restrict_to_flat(&arr, &[]).unwrap();
        assert_eq!(r.normals(), arr.normals());
        assert!(r.embedding().unwrap().is_identity());
    }

    #[test]
    fn a3_to_hyperplane() {
        let arr = build_coxeter_arrangement(CoxeterType::A, 3).unwrap();
        for h in 0..arr.len() {
            let r = restrict_to_flat(&arr, &[h]).unwrap();
            assert_eq!(r.rank(), 2);
            assert_eq!(r.len(), restricted_count_oracle(&arr.normals(), &[h], 3));
            assert_eq!(Fan::build(&r).unwrap().len(), 2 * r.len());
        }
    }

    #[test]
    fn d4_to_hyperplane() {
        let arr = build_coxeter_arrangement(CoxeterType::D, 4).unwrap();
        let r = restrict_to_flat(&arr, &[0]).unwrap();
        assert_eq!(r.rank(), 3);
        assert!(r.len() < 12);
        assert_eq!(r.len(), restricted_count_oracle(&arr.normals(), &[0], 4));
        assert!(is_simplicial(&r));
        // embedding maps the new coordinates into the flat
        let e = r.embedding().unwrap();
        for col in e.columns() {
            assert_eq!(dot(&arr.normals()[0], &col), 0);
        }
    }

    #[test]
    fn degenerate_and_bad_indices() {
        let arr = cd4_arrangement();
        assert!(matches!(restrict_to_flat(&arr, &[0, 1]), Err(Error::DegenerateFlat { .. })));
        assert!(restrict_to_flat(&arr, &[9]).is_err());
        let line = restrict_to_flat(&arr, &[2]).unwrap();
        assert_eq!(line.rank(), 1);
        assert_eq!(line.normals(), vec![vec![1]]);
    }
}
