//! The unnormalized bar complex over tuples of basic X-objects and its
//! homology, an algorithm for Tor independent of the resolution route in
//! `catmod`.
//!
//! Degree d chains: ⊕ Hom(X_{o_0}, B) ⊗ X(o_1, o_0) ⊗ ... ⊗ X(o_d, o_{d-1})
//! ⊗ Hom(A, X_{o_d}) over all object tuples (o_0, ..., o_d). Only the
//! degrees needed for one homology group are ever materialized.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::FdModule;
use crate::catmod::{restriction_left, restriction_right, CatModule, XCategory};
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// Shared per-(A, B) data: the two restriction modules supply the outer
/// composition coefficients, the category the inner ones.
pub struct BarSetup {
    pub cat: Arc<XCategory>,
    /// A(−, B), coefficients for composing the leftmost factor.
    pub right: CatModule,
    /// A(A, −), coefficients for composing the rightmost factor.
    pub left: CatModule,
}

impl BarSetup {
    pub fn new(a: &Arc<FdModule>, b: &Arc<FdModule>, cat: &Arc<XCategory>) -> BarSetup {
        BarSetup {
            cat: cat.clone(),
            right: restriction_right(b, cat),
            left: restriction_left(a, cat),
        }
    }
}

/// Basis bookkeeping for one chain degree: per object tuple, the offset and
/// the factor dimensions (last factor fastest).
pub struct BarChains {
    pub degree: usize,
    pub dim: usize,
    tuples: Vec<(Vec<usize>, usize, Vec<usize>)>,
    index: HashMap<Vec<usize>, usize>,
}

impl BarChains {
    /// Position of (tuple, factor indices) in the chain basis.
    fn position(&self, tuple: &[usize], factors: &[usize]) -> usize {
        let t = self.index[tuple];
        let (_, offset, dims) = &self.tuples[t];
        let mut pos = 0;
        for (f, d) in factors.iter().zip(dims) {
            pos = pos * d + f;
        }
        offset + pos
    }
}

fn factor_dims(setup: &BarSetup, tuple: &[usize]) -> Vec<usize> {
    let d = tuple.len() - 1;
    let mut dims = Vec::with_capacity(d + 2);
    dims.push(setup.right.dims[tuple[0]]);
    for k in 1..=d {
        dims.push(setup.cat.hom_dim(tuple[k], tuple[k - 1]));
    }
    dims.push(setup.left.dims[tuple[d]]);
    dims
}

/// Materialize the basis layout of degree `d`, skipping tuples with a zero
/// factor. Tuples are enumerated lexicographically.
pub fn chains(setup: &BarSetup, d: usize) -> BarChains {
    let size = setup.cat.size();
    if size == 0 {
        return BarChains { degree: d, dim: 0, tuples: Vec::new(), index: HashMap::new() };
    }
    let mut tuples = Vec::new();
    let mut index = HashMap::new();
    let mut dim = 0;
    let mut tuple = vec![0usize; d + 1];
    loop {
        let dims = factor_dims(setup, &tuple);
        let block: usize = dims.iter().product();
        if block > 0 {
            index.insert(tuple.clone(), tuples.len());
            tuples.push((tuple.clone(), dim, dims));
            dim += block;
        }
        // odometer over the tuple, last position fastest
        let mut pos = d + 1;
        while pos > 0 {
            tuple[pos - 1] += 1;
            if tuple[pos - 1] < size {
                break;
            }
            tuple[pos - 1] = 0;
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
    }
    BarChains { degree: d, dim, tuples, index }
}

/// The alternating-sum differential C_d -> C_{d-1}, d >= 1.
pub fn differential(setup: &BarSetup, src: &BarChains, tgt: &BarChains) -> Mat {
    assert_eq!(src.degree, tgt.degree + 1);
    let field = setup.cat.field;
    let d = src.degree;
    let mut mat = Mat::zeros(field, tgt.dim, src.dim);
    let mut factors = Vec::with_capacity(d + 2);
    for (tuple, offset, dims) in &src.tuples {
        let block: usize = dims.iter().product();
        for b in 0..block {
            let col = offset + b;
            factors.clear();
            let mut rem = b;
            for &fd in dims.iter().rev() {
                factors.push(rem % fd);
                rem /= fd;
            }
            factors.reverse();
            for face in 0..=d {
                let sign = face % 2 == 1;
                // coefficients of the composed factor in the target basis
                let (tgt_tuple, slot, coeffs): (Vec<usize>, usize, Mat) = if face == 0 {
                    let t: Vec<usize> = tuple[1..].to_vec();
                    // g ∘ x_1 via the right-module action
                    let m = &setup.right.action[tuple[1]][tuple[0]][factors[1]];
                    (t, 0, m.column(factors[0]))
                } else if face == d {
                    let t: Vec<usize> = tuple[..d].to_vec();
                    // x_d ∘ f via the left-module action
                    let m = &setup.left.action[tuple[d]][tuple[d - 1]][factors[d]];
                    (t, d, m.column(factors[d + 1]))
                } else {
                    let mut t = tuple.clone();
                    t.remove(face);
                    // x_face ∘ x_{face+1} inside the category
                    let coords = setup.cat.compose_coords(
                        tuple[face + 1],
                        tuple[face],
                        tuple[face - 1],
                        factors[face + 1],
                        factors[face],
                    );
                    (t, face, coords)
                };
                if !tgt.index.contains_key(&tgt_tuple) {
                    debug_assert!(coeffs.is_zero());
                    continue;
                }
                let mut tgt_factors: Vec<usize> = Vec::with_capacity(d + 1);
                for (k, &f) in factors.iter().enumerate() {
                    if face == 0 && k == 0 {
                        continue;
                    }
                    if face == d && k == d + 1 {
                        continue;
                    }
                    if face > 0 && face < d && k == face {
                        continue;
                    }
                    tgt_factors.push(f);
                }
                for c in 0..coeffs.rows() {
                    let v = coeffs.at(c, 0);
                    if v == 0 {
                        continue;
                    }
                    tgt_factors[slot] = c;
                    let row = tgt.position(&tgt_tuple, &tgt_factors);
                    let cur = mat.at(row, col);
                    let v = if sign { field.neg(v) } else { v };
                    mat.set(row, col, field.add(cur, v));
                }
            }
        }
    }
    mat
}

/// dim H_n of the bar complex. `top` bounds the materialized degrees; the
/// homology at n needs chains up to degree n + 1.
pub fn bar_tor(
    a: &Arc<FdModule>,
    b: &Arc<FdModule>,
    cat: &Arc<XCategory>,
    n: usize,
    top: usize,
) -> Result<usize> {
    if top < n + 1 {
        return Err(Error::Computation(format!(
            "bar complex truncated at degree {top} cannot see homology at degree {n}"
        )));
    }
    let setup = BarSetup::new(a, b, cat);
    let c_n = chains(&setup, n);
    let c_up = chains(&setup, n + 1);
    let d_in = differential(&setup, &c_up, &c_n);
    if n == 0 {
        return Ok(c_n.dim - d_in.rank());
    }
    let c_dn = chains(&setup, n - 1);
    let d_out = differential(&setup, &c_n, &c_dn);
    debug_assert!(d_out.mul(&d_in).is_zero(), "bar differential squares to zero");
    Ok(c_n.dim - d_out.rank() - d_in.rank())
}

/// Homology of the normalized complex: quotient by the degeneracy images
/// (identity insertions). A cross-check oracle for small inputs only.
pub fn normalized_bar_tor(
    a: &Arc<FdModule>,
    b: &Arc<FdModule>,
    cat: &Arc<XCategory>,
    n: usize,
) -> Result<usize> {
    let setup = BarSetup::new(a, b, cat);
    let degrees: Vec<BarChains> = (0..=n + 1).map(|d| chains(&setup, d)).collect();
    let field = cat.field;
    // quotient projections per degree
    let mut projs: Vec<(usize, Mat, Mat)> = Vec::new(); // (dim, proj, section)
    for d in 0..=n + 1 {
        let c = &degrees[d];
        let degen = if d == 0 {
            Mat::zeros(field, c.dim, 0)
        } else {
            let mut cols = Mat::zeros(field, c.dim, 0);
            for j in 0..d {
                cols = cols.hstack(&degeneracy(&setup, &degrees[d - 1], c, j));
            }
            cols
        };
        let free = crate::linalg::complement_indices(&degen, c.dim);
        let (_, piv) = degen.rref();
        let mut span = Mat::zeros(field, c.dim, 0);
        for &pc in &piv {
            span = span.hstack(&degen.column(pc));
        }
        let mut section = Mat::zeros(field, c.dim, free.len());
        for (k, &f) in free.iter().enumerate() {
            section.set(f, k, 1);
        }
        let s = span.hstack(&section);
        let proj = if c.dim == 0 {
            Mat::zeros(field, 0, 0)
        } else {
            s.solve(&Mat::identity(field, c.dim))
                .expect("shape")
                .expect("degeneracies plus complement span the chains")
                .submatrix(piv.len(), piv.len() + free.len(), 0, c.dim)
        };
        projs.push((free.len(), proj, section));
    }
    let norm_diff = |d: usize| -> Mat {
        let full = differential(&setup, &degrees[d], &degrees[d - 1]);
        projs[d - 1].1.mul(&full).mul(&projs[d].2)
    };
    let d_in = norm_diff(n + 1);
    if n == 0 {
        return Ok(projs[0].0 - d_in.rank());
    }
    let d_out = norm_diff(n);
    debug_assert!(d_out.mul(&d_in).is_zero());
    Ok(projs[n].0 - d_out.rank() - d_in.rank())
}

/// Degeneracy s_j: C_{d-1} -> C_d inserting the identity after slot j.
fn degeneracy(setup: &BarSetup, src: &BarChains, tgt: &BarChains, j: usize) -> Mat {
    let field = setup.cat.field;
    let d = tgt.degree;
    assert!(j < d);
    let mut mat = Mat::zeros(field, tgt.dim, src.dim);
    let mut factors = Vec::new();
    for (tuple, offset, dims) in &src.tuples {
        let id_coords = setup.cat.identity_coords(tuple[j]);
        let mut tgt_tuple = tuple.clone();
        tgt_tuple.insert(j + 1, tuple[j]);
        if !tgt.index.contains_key(&tgt_tuple) {
            continue;
        }
        let block: usize = dims.iter().product();
        for b in 0..block {
            let col = offset + b;
            factors.clear();
            let mut rem = b;
            for &fd in dims.iter().rev() {
                factors.push(rem % fd);
                rem /= fd;
            }
            factors.reverse();
            let mut tgt_factors = factors.clone();
            tgt_factors.insert(j + 1, 0);
            for c in 0..id_coords.rows() {
                let v = id_coords.at(c, 0);
                if v == 0 {
                    continue;
                }
                tgt_factors[j + 1] = c;
                let row = tgt.position(&tgt_tuple, &tgt_factors);
                let cur = mat.at(row, col);
                mat.set(row, col, field.add(cur, v));
            }
        }
    }
    mat
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catmod::{tensor_over_x, tor_of_pair};
    use crate::fixtures;

    fn setup_fixture(name: &str) -> (crate::registry::ObjectRegistry, Arc<XCategory>) {
        let reg = fixtures::load_bundled(name, None).unwrap();
        let cat = XCategory::from_subcategory(&reg.x_subcategory().unwrap());
        (reg, cat)
    }

    #[test]
    fn chain_dims_are_products() {
        let (reg, cat) = setup_fixture("a3");
        let a = reg.get("S3").unwrap();
        let b = reg.get("S1").unwrap();
        let s = BarSetup::new(&a, &b, &cat);
        for d in 0..=3 {
            let c = chains(&s, d);
            // combinatorial recount
            let mut expect = 0usize;
            let size = cat.size();
            let mut tuple = vec![0usize; d + 1];
            'outer: loop {
                expect += factor_dims(&s, &tuple).iter().product::<usize>();
                let mut pos = d + 1;
                while pos > 0 {
                    tuple[pos - 1] += 1;
                    if tuple[pos - 1] < size {
                        continue 'outer;
                    }
                    tuple[pos - 1] = 0;
                    pos -= 1;
                }
                break;
            }
            assert_eq!(c.dim, expect, "degree {d}");
        }
    }

    #[test]
    fn differential_squares_to_zero() {
        let (reg, cat) = setup_fixture("kt3");
        let k = reg.get("k").unwrap();
        let m = reg.get("M").unwrap();
        let s = BarSetup::new(&k, &m, &cat);
        let c: Vec<BarChains> = (0..=3).map(|d| chains(&s, d)).collect();
        for d in 1..3 {
            let d1 = differential(&s, &c[d], &c[d - 1]);
            let d2 = differential(&s, &c[d + 1], &c[d]);
            assert!(d1.mul(&d2).is_zero(), "degree {d}");
        }
    }

    #[test]
    fn h0_is_tensor_dim() {
        for name in fixtures::FIXTURE_NAMES {
            let (reg, cat) = setup_fixture(name);
            for a in &reg.modules {
                for b in &reg.modules {
                    let t =
                        tensor_over_x(&restriction_right(b, &cat), &restriction_left(a, &cat));
                    let h0 = bar_tor(a, b, &cat, 0, 2).unwrap();
                    assert_eq!(h0, t.dim, "{name}: ({}, {})", a.name, b.name);
                }
            }
        }
    }

    #[test]
    fn dual_numbers_bar_tor() {
        let (reg, cat) = setup_fixture("kt2");
        let k = reg.get("k").unwrap();
        for n in 1..=3 {
            assert_eq!(bar_tor(&k, &k, &cat, n, n + 1).unwrap(), 1, "n = {n}");
        }
    }

    #[test]
    fn representable_target_vanishes() {
        let (reg, cat) = setup_fixture("kt2");
        let k = reg.get("k").unwrap();
        let lambda = reg.get("Lambda").unwrap();
        for n in 1..=2 {
            assert_eq!(bar_tor(&k, &lambda, &cat, n, n + 1).unwrap(), 0, "B in X");
        }
    }

    #[test]
    fn truncation_too_small_is_an_error() {
        let (reg, cat) = setup_fixture("kt2");
        let k = reg.get("k").unwrap();
        assert!(bar_tor(&k, &k, &cat, 3, 3).is_err());
    }

    #[test]
    fn agrees_with_resolution_tor() {
        for name in fixtures::FIXTURE_NAMES {
            let (reg, cat) = setup_fixture(name);
            for a in &reg.modules {
                for b in &reg.modules {
                    for n in 0..=4usize {
                        let via_bar = bar_tor(a, b, &cat, n, n + 1).unwrap();
                        let via_res = tor_of_pair(a, b, &cat, n, false);
                        assert_eq!(via_bar, via_res, "{name}: ({}, {}), n = {n}", a.name, b.name);
                    }
                }
            }
        }
    }

    #[test]
    fn normalization_insensitive() {
        let (reg, cat) = setup_fixture("kt2");
        for a in &reg.modules {
            for b in &reg.modules {
                for n in 0..=2usize {
                    let raw = bar_tor(a, b, &cat, n, n + 1).unwrap();
                    let norm = normalized_bar_tor(a, b, &cat, n).unwrap();
                    assert_eq!(raw, norm, "({}, {}), n = {n}", a.name, b.name);
                }
            }
        }
    }
}
