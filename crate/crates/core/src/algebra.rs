//! Finite-dimensional algebras by structure constants, their left modules,
//! module homomorphisms, kernels, cokernels and direct sums.
//!
//! Right modules never appear directly: a right module is a left module
//! over the opposite algebra, see [`AlgebraPresentation::opposite`].

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Mat};

/// An associative unital algebra over F_p given by a basis and the
/// structure-constant tensor `mult[i][j] = coefficients of e_i * e_j`.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    pub field: FieldSpec,
    pub dim: usize,
    pub basis_names: Vec<String>,
    pub mult: Vec<Vec<Vec<u64>>>,
    pub unit: Vec<u64>,
}

impl AlgebraPresentation {
    pub fn new(
        field: FieldSpec,
        basis_names: Vec<String>,
        mult: Vec<Vec<Vec<i64>>>,
        unit: Vec<i64>,
    ) -> Result<Self> {
        let dim = basis_names.len();
        if mult.len() != dim
            || mult.iter().any(|row| row.len() != dim || row.iter().any(|v| v.len() != dim))
        {
            return Err(Error::DimMismatch("mult tensor must be dim x dim x dim".into()));
        }
        if unit.len() != dim {
            return Err(Error::DimMismatch("unit vector length != dim".into()));
        }
        let mult = mult
            .into_iter()
            .map(|row| row.into_iter().map(|v| v.into_iter().map(|x| field.reduce(x)).collect()).collect())
            .collect();
        let unit = unit.into_iter().map(|x| field.reduce(x)).collect();
        Ok(AlgebraPresentation { field, dim, basis_names, mult, unit })
    }

    /// Coefficient vector of `e_i * e_j`.
    fn prod(&self, i: usize, j: usize) -> &[u64] {
        &self.mult[i][j]
    }

    /// Associativity and unit axioms; returns every violated identity.
    pub fn validate(&self) -> Vec<String> {
        let f = self.field;
        let mut problems = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    // (e_i e_j) e_k vs e_i (e_j e_k)
                    let mut lhs = vec![0u64; self.dim];
                    for (m, &c) in self.prod(i, j).iter().enumerate() {
                        for (t, &d) in self.prod(m, k).iter().enumerate() {
                            lhs[t] = f.add(lhs[t], f.mul(c, d));
                        }
                    }
                    let mut rhs = vec![0u64; self.dim];
                    for (m, &c) in self.prod(j, k).iter().enumerate() {
                        for (t, &d) in self.prod(i, m).iter().enumerate() {
                            rhs[t] = f.add(rhs[t], f.mul(c, d));
                        }
                    }
                    if lhs != rhs {
                        problems.push(format!("associativity fails at basis triple ({i},{j},{k})"));
                    }
                }
            }
        }
        let id = Mat::identity(f, self.dim);
        if self.left_action_of(&self.unit) != id {
            problems.push("unit does not act as identity on the left".into());
        }
        if self.right_action_of(&self.unit) != id {
            problems.push("unit does not act as identity on the right".into());
        }
        problems
    }

    /// Matrix of left multiplication by `e_i` on the algebra itself.
    pub fn left_mult_matrix(&self, i: usize) -> Mat {
        Mat::from_fn(self.field, self.dim, self.dim, |k, j| self.mult[i][j][k])
    }

    fn right_mult_matrix(&self, i: usize) -> Mat {
        Mat::from_fn(self.field, self.dim, self.dim, |k, j| self.mult[j][i][k])
    }

    fn left_action_of(&self, coeffs: &[u64]) -> Mat {
        let mut acc = Mat::zeros(self.field, self.dim, self.dim);
        for (i, &c) in coeffs.iter().enumerate() {
            acc = acc.add(&self.left_mult_matrix(i).scale(c));
        }
        acc
    }

    fn right_action_of(&self, coeffs: &[u64]) -> Mat {
        let mut acc = Mat::zeros(self.field, self.dim, self.dim);
        for (i, &c) in coeffs.iter().enumerate() {
            acc = acc.add(&self.right_mult_matrix(i).scale(c));
        }
        acc
    }

    /// The opposite algebra: `mult` with the two factors swapped.
    pub fn opposite(&self) -> AlgebraPresentation {
        let mut mult = self.mult.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                mult[i][j] = self.mult[j][i].clone();
            }
        }
        AlgebraPresentation {
            field: self.field,
            dim: self.dim,
            basis_names: self.basis_names.clone(),
            mult,
            unit: self.unit.clone(),
        }
    }
}

/// A finite-dimensional left module: one action matrix per algebra basis
/// element, acting on coordinate columns.
#[derive(Clone, Debug)]
pub struct FdModule {
    pub name: String,
    pub algebra: Arc<AlgebraPresentation>,
    pub dim: usize,
    pub action: Vec<Mat>,
    /// Set when the module was built as a direct sum, in summand order.
    /// Hom computations split along this structure instead of solving one
    /// monolithic system.
    pub parts: Option<Vec<Arc<FdModule>>>,
}

impl FdModule {
    pub fn new(name: impl Into<String>, algebra: Arc<AlgebraPresentation>, action: Vec<Mat>) -> Result<Self> {
        if action.len() != algebra.dim {
            return Err(Error::DimMismatch("one action matrix per algebra basis element".into()));
        }
        let dim = action.first().map(|m| m.rows()).unwrap_or(0);
        for m in &action {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimMismatch("action matrices must be square of module dim".into()));
            }
        }
        Ok(FdModule { name: name.into(), algebra, dim, action, parts: None })
    }

    pub fn zero(algebra: Arc<AlgebraPresentation>) -> Arc<FdModule> {
        let action = (0..algebra.dim).map(|_| Mat::zeros(algebra.field, 0, 0)).collect();
        Arc::new(FdModule { name: "0".into(), algebra, dim: 0, action, parts: None })
    }

    /// The regular module, i.e. the algebra acting on itself on the left.
    pub fn regular(algebra: Arc<AlgebraPresentation>) -> Arc<FdModule> {
        let action = (0..algebra.dim).map(|i| algebra.left_mult_matrix(i)).collect();
        let dim = algebra.dim;
        Arc::new(FdModule { name: "__regular".into(), algebra, dim, action, parts: None })
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field
    }

    /// Action of the unit; must be the identity on a valid module.
    pub fn unit_action(&self) -> Mat {
        let mut acc = Mat::zeros(self.field(), self.dim, self.dim);
        for (i, &c) in self.algebra.unit.iter().enumerate() {
            acc = acc.add(&self.action[i].scale(c));
        }
        acc
    }

    /// Module axioms against the algebra's structure constants.
    pub fn validate(&self) -> Vec<String> {
        let mut problems = Vec::new();
        let alg = &self.algebra;
        for i in 0..alg.dim {
            for j in 0..alg.dim {
                let lhs = self.action[i].mul(&self.action[j]);
                let mut rhs = Mat::zeros(self.field(), self.dim, self.dim);
                for (k, &c) in alg.mult[i][j].iter().enumerate() {
                    rhs = rhs.add(&self.action[k].scale(c));
                }
                if lhs != rhs {
                    problems.push(format!(
                        "module `{}`: action is not multiplicative at basis pair ({i},{j})",
                        self.name
                    ));
                }
            }
        }
        if self.unit_action() != Mat::identity(self.field(), self.dim) {
            problems.push(format!("module `{}`: unit does not act as identity", self.name));
        }
        problems
    }
}

/// A module homomorphism, `matrix` of shape dim(target) x dim(source).
#[derive(Clone, Debug)]
pub struct ModuleHom {
    pub source: Arc<FdModule>,
    pub target: Arc<FdModule>,
    pub matrix: Mat,
}

impl ModuleHom {
    pub fn new(source: Arc<FdModule>, target: Arc<FdModule>, matrix: Mat) -> Result<Self> {
        if matrix.rows() != target.dim || matrix.cols() != source.dim {
            return Err(Error::DimMismatch(format!(
                "hom matrix must be {} x {}",
                target.dim, source.dim
            )));
        }
        let hom = ModuleHom { source, target, matrix };
        if !hom.intertwines() {
            return Err(Error::Computation("matrix does not intertwine the actions".into()));
        }
        Ok(hom)
    }

    pub fn identity(m: &Arc<FdModule>) -> ModuleHom {
        ModuleHom {
            source: m.clone(),
            target: m.clone(),
            matrix: Mat::identity(m.field(), m.dim),
        }
    }

    pub fn zero(source: Arc<FdModule>, target: Arc<FdModule>) -> ModuleHom {
        let matrix = Mat::zeros(source.field(), target.dim, source.dim);
        ModuleHom { source, target, matrix }
    }

    pub fn intertwines(&self) -> bool {
        (0..self.source.algebra.dim).all(|i| {
            self.matrix.mul(&self.source.action[i]) == self.target.action[i].mul(&self.matrix)
        })
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &ModuleHom) -> ModuleHom {
        assert_eq!(other.target.dim, self.source.dim, "compose shape");
        ModuleHom {
            source: other.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&other.matrix),
        }
    }
}

/// Basis of Hom_Λ(M, N): solutions of the intertwining equations, reshaped
/// to dim(N) x dim(M) matrices. Deterministic given the module bases.
pub fn hom_space(m: &Arc<FdModule>, n: &Arc<FdModule>) -> Vec<Mat> {
    HomSpace::compute(m, n).basis
}

/// A computed basis of Hom_Λ(M, N) that remembers how it was built.
/// When M or N is a direct sum the basis splits along the summands and
/// coordinates of further homs are read off block by block, which keeps
/// the elimination sizes bounded by the summand dimensions.
pub struct HomSpace {
    pub source: Arc<FdModule>,
    pub target: Arc<FdModule>,
    pub basis: Vec<Mat>,
    structure: HomStructure,
}

enum HomStructure {
    /// Coordinates by solving against the stacked vectorized basis.
    Plain { span: Option<Mat> },
    /// (row offset in the target, hom space into that summand)
    TargetBlocks(Vec<(usize, Arc<HomSpace>)>),
    /// (column offset in the source, hom space out of that summand)
    SourceBlocks(Vec<(usize, Arc<HomSpace>)>),
}

type HomMemo = HashMap<(usize, usize), Arc<HomSpace>>;

impl HomSpace {
    pub fn compute(m: &Arc<FdModule>, n: &Arc<FdModule>) -> HomSpace {
        let mut memo = HomMemo::new();
        Self::build(m, n, &mut memo)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn cached(m: &Arc<FdModule>, n: &Arc<FdModule>, memo: &mut HomMemo) -> Arc<HomSpace> {
        let key = (Arc::as_ptr(m) as usize, Arc::as_ptr(n) as usize);
        if let Some(s) = memo.get(&key) {
            return s.clone();
        }
        let s = Arc::new(Self::build(m, n, memo));
        memo.insert(key, s.clone());
        s
    }

    fn build(m: &Arc<FdModule>, n: &Arc<FdModule>, memo: &mut HomMemo) -> HomSpace {
        let field = m.field();
        if let Some(parts) = n.parts.clone() {
            let mut blocks = Vec::new();
            let mut basis = Vec::new();
            let mut off = 0;
            for part in &parts {
                let sub = Self::cached(m, part, memo);
                for b in &sub.basis {
                    let mut emb = Mat::zeros(field, n.dim, m.dim);
                    for r in 0..part.dim {
                        for c in 0..m.dim {
                            emb.set(off + r, c, b.at(r, c));
                        }
                    }
                    basis.push(emb);
                }
                blocks.push((off, sub));
                off += part.dim;
            }
            return HomSpace {
                source: m.clone(),
                target: n.clone(),
                basis,
                structure: HomStructure::TargetBlocks(blocks),
            };
        }
        if let Some(parts) = m.parts.clone() {
            let mut blocks = Vec::new();
            let mut basis = Vec::new();
            let mut off = 0;
            for part in &parts {
                let sub = Self::cached(part, n, memo);
                for b in &sub.basis {
                    let mut emb = Mat::zeros(field, n.dim, m.dim);
                    for r in 0..n.dim {
                        for c in 0..part.dim {
                            emb.set(r, off + c, b.at(r, c));
                        }
                    }
                    basis.push(emb);
                }
                blocks.push((off, sub));
                off += part.dim;
            }
            return HomSpace {
                source: m.clone(),
                target: n.clone(),
                basis,
                structure: HomStructure::SourceBlocks(blocks),
            };
        }
        let (dm, dn) = (m.dim, n.dim);
        if dm == 0 || dn == 0 {
            return HomSpace {
                source: m.clone(),
                target: n.clone(),
                basis: Vec::new(),
                structure: HomStructure::Plain { span: None },
            };
        }
        let gens = m.algebra.dim;
        // Unknowns: entries of F (dn x dm), row-major. Constraints per basis
        // element i: F * act_M(i) - act_N(i) * F = 0.
        let vars = dn * dm;
        let mut sys = Mat::zeros(field, gens * vars, vars);
        for i in 0..gens {
            let am = &m.action[i];
            let an = &n.action[i];
            for r in 0..dn {
                for c in 0..dm {
                    let row = i * vars + r * dm + c;
                    for s in 0..dm {
                        let cur = sys.at(row, r * dm + s);
                        sys.set(row, r * dm + s, field.add(cur, am.at(s, c)));
                    }
                    for s in 0..dn {
                        let cur = sys.at(row, s * dm + c);
                        sys.set(row, s * dm + c, field.sub(cur, an.at(r, s)));
                    }
                }
            }
        }
        let ker = sys.kernel_basis();
        let basis: Vec<Mat> =
            (0..ker.cols()).map(|k| Mat::from_column(&ker.column(k), dn, dm)).collect();
        let span = if basis.is_empty() { None } else { Some(ker) };
        HomSpace { source: m.clone(), target: n.clone(), basis, structure: HomStructure::Plain { span } }
    }

    /// Coordinate columns, one per input hom. Every input must lie in the
    /// space and have the right shape.
    pub fn coords_batch(&self, mats: &[Mat]) -> Mat {
        let field = self.source.field();
        let count = mats.len();
        match &self.structure {
            HomStructure::Plain { span } => {
                let Some(span) = span else {
                    for m in mats {
                        assert!(m.is_zero(), "nonzero element of a zero space");
                    }
                    return Mat::zeros(field, 0, count);
                };
                if count == 0 {
                    return Mat::zeros(field, self.basis.len(), 0);
                }
                let rhs = Mat::from_fn(field, span.rows(), count, |r, c| {
                    mats[c].at(r / self.source.dim, r % self.source.dim)
                });
                span.solve(&rhs)
                    .expect("shape")
                    .expect("element must lie in the span of the basis")
            }
            HomStructure::TargetBlocks(blocks) => {
                let mut out = Mat::zeros(field, self.basis.len(), count);
                let mut cursor = 0;
                for (off, sub) in blocks {
                    let slices: Vec<Mat> = mats
                        .iter()
                        .map(|m| m.submatrix(*off, off + sub.target.dim, 0, m.cols()))
                        .collect();
                    let coords = sub.coords_batch(&slices);
                    for r in 0..sub.dim() {
                        for c in 0..count {
                            out.set(cursor + r, c, coords.at(r, c));
                        }
                    }
                    cursor += sub.dim();
                }
                out
            }
            HomStructure::SourceBlocks(blocks) => {
                let mut out = Mat::zeros(field, self.basis.len(), count);
                let mut cursor = 0;
                for (off, sub) in blocks {
                    let slices: Vec<Mat> = mats
                        .iter()
                        .map(|m| m.submatrix(0, m.rows(), *off, off + sub.source.dim))
                        .collect();
                    let coords = sub.coords_batch(&slices);
                    for r in 0..sub.dim() {
                        for c in 0..count {
                            out.set(cursor + r, c, coords.at(r, c));
                        }
                    }
                    cursor += sub.dim();
                }
                out
            }
        }
    }

    /// Matrix of `g ∘ -` : this space -> `tgt`, where `g`: target -> P.
    pub fn post_compose_to(&self, g: &Mat, tgt: &HomSpace) -> Mat {
        let images: Vec<Mat> = self.basis.iter().map(|phi| g.mul(phi)).collect();
        tgt.coords_batch(&images)
    }

    /// Matrix of `- ∘ g` : this space -> `tgt`, where `g`: M -> source.
    pub fn pre_compose_to(&self, g: &Mat, tgt: &HomSpace) -> Mat {
        let images: Vec<Mat> = self.basis.iter().map(|phi| phi.mul(g)).collect();
        tgt.coords_batch(&images)
    }
}

/// Coordinates of `target` in the given basis of a Hom space (or any list
/// of equal-shaped matrices known to span it).
pub fn coords_in_basis(basis: &[Mat], target: &Mat) -> Mat {
    let field = target.field();
    if basis.is_empty() {
        assert!(target.is_zero(), "nonzero element of a zero space");
        return Mat::zeros(field, 0, 1);
    }
    let mut span = basis[0].vectorize();
    for b in &basis[1..] {
        span = span.hstack(&b.vectorize());
    }
    span.solve(&target.vectorize())
        .expect("shape")
        .expect("element must lie in the span of the basis")
}

/// Matrix of `g ∘ -` : Hom(M, N) -> Hom(M, P) in the given bases.
pub fn post_compose_matrix(src_basis: &[Mat], g: &Mat, tgt_basis: &[Mat], field: FieldSpec) -> Mat {
    let mut out = Mat::zeros(field, tgt_basis.len(), src_basis.len());
    for (j, phi) in src_basis.iter().enumerate() {
        let coords = coords_in_basis(tgt_basis, &g.mul(phi));
        for i in 0..coords.rows() {
            out.set(i, j, coords.at(i, 0));
        }
    }
    out
}

/// Matrix of `- ∘ g` : Hom(N, P) -> Hom(M, P) in the given bases.
pub fn pre_compose_matrix(src_basis: &[Mat], g: &Mat, tgt_basis: &[Mat], field: FieldSpec) -> Mat {
    let mut out = Mat::zeros(field, tgt_basis.len(), src_basis.len());
    for (j, phi) in src_basis.iter().enumerate() {
        let coords = coords_in_basis(tgt_basis, &phi.mul(g));
        for i in 0..coords.rows() {
            out.set(i, j, coords.at(i, 0));
        }
    }
    out
}

/// Kernel of a module map, with the induced action and the inclusion.
pub fn kernel(f: &ModuleHom) -> (Arc<FdModule>, ModuleHom) {
    let field = f.source.field();
    let k = f.matrix.kernel_basis();
    let kdim = k.cols();
    let alg = f.source.algebra.clone();
    let action = if kdim == 0 {
        (0..alg.dim).map(|_| Mat::zeros(field, 0, 0)).collect()
    } else {
        // a * K = K * B for every basis element at once, solvable since the
        // kernel is a submodule
        let mut rhs = f.source.action[0].mul(&k);
        for i in 1..alg.dim {
            rhs = rhs.hstack(&f.source.action[i].mul(&k));
        }
        let b = k.solve(&rhs).expect("shape").expect("kernel is stable under the action");
        (0..alg.dim).map(|i| b.submatrix(0, kdim, i * kdim, (i + 1) * kdim)).collect()
    };
    let module = Arc::new(FdModule {
        name: format!("ker[{}]", f.source.name),
        algebra: alg,
        dim: kdim,
        action,
        parts: None,
    });
    let inclusion = ModuleHom { source: module.clone(), target: f.source.clone(), matrix: k };
    (module, inclusion)
}

/// Cokernel of a module map, with the induced action and the projection.
pub fn cokernel(f: &ModuleHom) -> (Arc<FdModule>, ModuleHom) {
    let field = f.target.field();
    // Rows annihilating the image give a surjection with kernel = image.
    let proj = f.matrix.transpose().kernel_basis().transpose();
    let qdim = proj.rows();
    let alg = f.target.algebra.clone();
    let action = if qdim == 0 {
        (0..alg.dim).map(|_| Mat::zeros(field, 0, 0)).collect()
    } else {
        // B * P = P * a, solve the transposed system (P^T has full column rank)
        let mut rhs = proj.mul(&f.target.action[0]).transpose();
        for i in 1..alg.dim {
            rhs = rhs.hstack(&proj.mul(&f.target.action[i]).transpose());
        }
        let bt = proj.transpose().solve(&rhs).expect("shape").expect("quotient action well-defined");
        (0..alg.dim)
            .map(|i| bt.submatrix(0, qdim, i * qdim, (i + 1) * qdim).transpose())
            .collect()
    };
    let module = Arc::new(FdModule {
        name: format!("coker[{}]", f.target.name),
        algebra: alg,
        dim: qdim,
        action,
        parts: None,
    });
    let projection = ModuleHom { source: f.target.clone(), target: module.clone(), matrix: proj };
    (module, projection)
}

/// Direct sum with its canonical injections and projections.
pub fn direct_sum(
    algebra: &Arc<AlgebraPresentation>,
    parts: &[Arc<FdModule>],
) -> (Arc<FdModule>, Vec<ModuleHom>, Vec<ModuleHom>) {
    let field = algebra.field;
    let total: usize = parts.iter().map(|m| m.dim).sum();
    let mut action = Vec::with_capacity(algebra.dim);
    for i in 0..algebra.dim {
        let mut blk = Mat::zeros(field, total, total);
        let mut off = 0;
        for part in parts {
            for r in 0..part.dim {
                for c in 0..part.dim {
                    blk.set(off + r, off + c, part.action[i].at(r, c));
                }
            }
            off += part.dim;
        }
        action.push(blk);
    }
    let name = if parts.is_empty() {
        "0".to_string()
    } else {
        parts.iter().map(|p| p.name.as_str()).collect::<Vec<_>>().join("+")
    };
    let parts_rec = if parts.is_empty() { None } else { Some(parts.to_vec()) };
    let sum = Arc::new(FdModule { name, algebra: algebra.clone(), dim: total, action, parts: parts_rec });
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut off = 0;
    for part in parts {
        let inj = Mat::from_fn(field, total, part.dim, |r, c| u64::from(r == off + c));
        let prj = Mat::from_fn(field, part.dim, total, |r, c| u64::from(c == off + r));
        injections.push(ModuleHom { source: part.clone(), target: sum.clone(), matrix: inj });
        projections.push(ModuleHom { source: sum.clone(), target: part.clone(), matrix: prj });
        off += part.dim;
    }
    (sum, injections, projections)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn dual_numbers_validate() {
        let reg = fixtures::load_bundled("kt2", None).unwrap();
        assert!(reg.algebra.validate().is_empty());
        for m in &reg.modules {
            assert!(m.validate().is_empty(), "module {}", m.name);
        }
    }

    #[test]
    fn broken_associativity_reported() {
        let field = FieldSpec::default_field();
        // u unit, a*b = u but b*a = 0: (a b) a = a while a (b a) = 0
        let alg = AlgebraPresentation::new(
            field,
            vec!["u".into(), "a".into(), "b".into()],
            vec![
                vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
                vec![vec![0, 1, 0], vec![0, 0, 0], vec![1, 0, 0]],
                vec![vec![0, 0, 1], vec![0, 0, 0], vec![0, 0, 0]],
            ],
            vec![1, 0, 0],
        )
        .unwrap();
        let problems = alg.validate();
        assert!(problems.iter().any(|p| p.contains("associativity")), "{problems:?}");
    }

    #[test]
    fn broken_unit_reported() {
        let reg = fixtures::load_bundled("kt2", None).unwrap();
        let alg = reg.algebra.clone();
        let bad = FdModule::new(
            "bad",
            alg,
            vec![
                Mat::from_rows(reg.algebra.field, &[vec![2]]),
                Mat::zeros(reg.algebra.field, 1, 1),
            ],
        )
        .unwrap();
        assert!(bad.validate().iter().any(|p| p.contains("unit")));
    }

    #[test]
    fn hom_space_dual_numbers() {
        let reg = fixtures::load_bundled("kt2", None).unwrap();
        let lambda = reg.get("Lambda").unwrap();
        let k = reg.get("k").unwrap();
        assert_eq!(hom_space(&lambda, &k).len(), 1);
        assert_eq!(hom_space(&k, &lambda).len(), 1);
        // socle embedding: image is the span of t
        let e = &hom_space(&k, &lambda)[0];
        assert_eq!(e.at(0, 0), 0);
        assert_ne!(e.at(1, 0), 0);
    }

    #[test]
    fn hom_space_kt3() {
        let reg = fixtures::load_bundled("kt3", None).unwrap();
        let k = reg.get("k").unwrap();
        let m = reg.get("M").unwrap();
        assert_eq!(hom_space(&k, &m).len(), 1);
        assert_eq!(hom_space(&m, &m).len(), 2);
    }

    #[test]
    fn free_module_hom_dimension() {
        for name in ["kt2", "kt3", "a2", "a3"] {
            let reg = fixtures::load_bundled(name, None).unwrap();
            let regular = FdModule::regular(reg.algebra.clone());
            for m in &reg.modules {
                assert_eq!(hom_space(&regular, m).len(), m.dim, "fixture {name}, module {}", m.name);
            }
        }
    }

    #[test]
    fn kernel_cokernel_basics() {
        let reg = fixtures::load_bundled("kt2", None).unwrap();
        let lambda = reg.get("Lambda").unwrap();
        let k = reg.get("k").unwrap();

        let (z, _) = kernel(&ModuleHom::identity(&lambda));
        assert_eq!(z.dim, 0);
        let (m, _) = kernel(&ModuleHom::zero(lambda.clone(), k.clone()));
        assert_eq!(m.dim, lambda.dim);

        // kernel of the projection Lambda ->> k is 1-dimensional with t acting by 0
        let pr = ModuleHom::new(
            lambda.clone(),
            k.clone(),
            hom_space(&lambda, &k)[0].clone(),
        )
        .unwrap();
        let (ker, inc) = kernel(&pr);
        assert_eq!(ker.dim, 1);
        assert!(ker.action[1].is_zero());
        assert!(pr.matrix.mul(&inc.matrix).is_zero());

        let (c, _) = cokernel(&ModuleHom::identity(&lambda));
        assert_eq!(c.dim, 0);
        let (c, _) = cokernel(&ModuleHom::zero(k.clone(), lambda.clone()));
        assert_eq!(c.dim, lambda.dim);
        let soc = ModuleHom::new(k.clone(), lambda.clone(), hom_space(&k, &lambda)[0].clone()).unwrap();
        let (q, prj) = cokernel(&soc);
        assert_eq!(q.dim, 1);
        assert!(q.action[1].is_zero());
        assert!(prj.matrix.mul(&soc.matrix).is_zero());
    }

    #[test]
    fn rank_nullity_for_homs() {
        let reg = fixtures::load_bundled("kt3", None).unwrap();
        for a in &reg.modules {
            for b in &reg.modules {
                for mat in hom_space(a, b) {
                    let f = ModuleHom::new(a.clone(), b.clone(), mat).unwrap();
                    let (ker, _) = kernel(&f);
                    let (cok, _) = cokernel(&f);
                    assert_eq!(ker.dim + f.matrix.rank(), a.dim);
                    assert_eq!(cok.dim + f.matrix.rank(), b.dim);
                }
            }
        }
    }

    #[test]
    fn direct_sum_biproduct() {
        let reg = fixtures::load_bundled("kt2", None).unwrap();
        let k = reg.get("k").unwrap();
        let (empty, _, _) = direct_sum(&reg.algebra, &[]);
        assert_eq!(empty.dim, 0);
        let (kk, inj, prj) = direct_sum(&reg.algebra, &[k.clone(), k.clone()]);
        assert_eq!(kk.dim, 2);
        assert!(kk.action[1].is_zero());
        for i in 0..2 {
            for j in 0..2 {
                let comp = prj[i].compose(&inj[j]).matrix;
                if i == j {
                    assert_eq!(comp, Mat::identity(k.field(), 1));
                } else {
                    assert!(comp.is_zero());
                }
            }
        }
        let (m0, _, _) = direct_sum(&reg.algebra, &[k.clone(), FdModule::zero(reg.algebra.clone())]);
        assert_eq!(m0.dim, k.dim);
        assert_eq!(m0.action[1], k.action[1]);
    }

    #[test]
    fn hom_dim_independent_of_listing_order() {
        let reg = fixtures::load_bundled("kt3", None).unwrap();
        let m = reg.get("M").unwrap();
        let k = reg.get("k").unwrap();
        let d1 = hom_space(&m, &k).len();
        let d2 = hom_space(&m, &k).len();
        assert_eq!(d1, d2);
        assert_eq!(hom_space(&k, &m).len(), 1);
    }

    #[test]
    fn opposite_of_opposite() {
        let reg = fixtures::load_bundled("a2", None).unwrap();
        let op = reg.algebra.opposite();
        assert!(op.validate().is_empty());
        assert_eq!(op.opposite().mult, reg.algebra.mult);
    }
}
