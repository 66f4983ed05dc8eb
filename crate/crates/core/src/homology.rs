//! Cohomology dimensions of a finite complex of F_p vector spaces given by
//! per-degree dimensions and differential matrices.

use crate::linalg::Mat;

/// Cochain complex supported on `lo .. lo + dims.len()`, with
/// `maps[k] : C^{lo+k} -> C^{lo+k+1}`. Spaces outside the support are zero.
pub struct GradedComplex {
    pub lo: i64,
    pub dims: Vec<usize>,
    pub maps: Vec<Mat>,
}

impl GradedComplex {
    pub fn new(lo: i64, dims: Vec<usize>, maps: Vec<Mat>) -> Self {
        assert_eq!(maps.len() + 1, dims.len().max(1), "one map between consecutive degrees");
        for (k, m) in maps.iter().enumerate() {
            assert_eq!(m.cols(), dims[k], "map {k} source dim");
            assert_eq!(m.rows(), dims[k + 1], "map {k} target dim");
        }
        GradedComplex { lo, dims, maps }
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    pub fn check_d2(&self) -> Result<(), String> {
        for k in 0..self.maps.len().saturating_sub(1) {
            if !self.maps[k + 1].mul(&self.maps[k]).is_zero() {
                return Err(format!("d^2 != 0 between degrees {} and {}", self.lo + k as i64, self.lo + k as i64 + 2));
            }
        }
        Ok(())
    }

    fn rank_out(&self, deg: i64) -> usize {
        let k = deg - self.lo;
        if k < 0 || k as usize >= self.maps.len() {
            0
        } else {
            self.maps[k as usize].rank()
        }
    }

    pub fn dim_at(&self, deg: i64) -> usize {
        let k = deg - self.lo;
        if k < 0 || k as usize >= self.dims.len() {
            0
        } else {
            self.dims[k as usize]
        }
    }

    /// dim ker(d at `deg`) - rank(d into `deg`).
    pub fn cohomology_dim(&self, deg: i64) -> usize {
        self.dim_at(deg) - self.rank_out(deg) - self.rank_out(deg - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;

    #[test]
    fn two_term_complex() {
        let f = FieldSpec::default_field();
        // k --id--> k in degrees -1, 0: acyclic
        let c = GradedComplex::new(-1, vec![1, 1], vec![Mat::identity(f, 1)]);
        c.check_d2().unwrap();
        assert_eq!(c.cohomology_dim(-1), 0);
        assert_eq!(c.cohomology_dim(0), 0);
        assert_eq!(c.cohomology_dim(5), 0);
    }

    #[test]
    fn zero_differentials() {
        let f = FieldSpec::default_field();
        let c = GradedComplex::new(
            0,
            vec![2, 3, 1],
            vec![Mat::zeros(f, 3, 2), Mat::zeros(f, 1, 3)],
        );
        assert_eq!(c.cohomology_dim(0), 2);
        assert_eq!(c.cohomology_dim(1), 3);
        assert_eq!(c.cohomology_dim(2), 1);
    }

    #[test]
    fn d2_violation_detected() {
        let f = FieldSpec::default_field();
        let c = GradedComplex::new(
            0,
            vec![1, 1, 1],
            vec![Mat::identity(f, 1), Mat::identity(f, 1)],
        );
        assert!(c.check_d2().is_err());
    }
}
