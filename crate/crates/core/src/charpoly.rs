//! Laplacian matrices and exact characteristic polynomials.
//!
//! `charpoly` uses the Berkowitz recursion, which needs only ring
//! operations. `charpoly_by_interpolation` is an independent route
//! (fraction-free Bareiss determinants of `kI - M` at `k = 0..=n`, then Newton
//! interpolation over the rationals) kept as a cross-check.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPolynomial;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// Dense square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParams(
                "matrix rows must form a square".into(),
            ));
        }
        Ok(IntMatrix {
            n,
            data: rows.into_iter().flatten().map(BigInt::from).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.n + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).sum())
            .collect()
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Principal submatrix on the listed indices, in the given order.
    pub fn principal_submatrix(&self, keep: &[usize]) -> IntMatrix {
        let n = keep.len();
        let mut data = Vec::with_capacity(n * n);
        for &i in keep {
            for &j in keep {
                data.push(self.get(i, j).clone());
            }
        }
        IntMatrix { n, data }
    }

    /// Principal submatrix with the listed rows and columns removed.
    pub fn delete(&self, remove: &[usize]) -> IntMatrix {
        let keep: Vec<usize> = (0..self.n).filter(|i| !remove.contains(i)).collect();
        self.principal_submatrix(&keep)
    }

    /// `k*I - self`
    fn shifted(&self, k: &BigInt) -> IntMatrix {
        let mut out = IntMatrix {
            n: self.n,
            data: self.data.iter().map(|v| -v).collect(),
        };
        for i in 0..self.n {
            let d = out.get(i, i) + k;
            out.set(i, i, d);
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        write!(f, "IntMatrix({rows:?})")
    }
}

/// `L = D - A`.
pub fn laplacian(g: &Graph) -> IntMatrix {
    let mut m = IntMatrix::zeros(g.n());
    for (v, d) in g.degrees().into_iter().enumerate() {
        m.set(v, v, BigInt::from(d));
    }
    for &(i, j) in g.edges() {
        m.set(i, j, BigInt::from(-1));
        m.set(j, i, BigInt::from(-1));
    }
    m
}

/// `det(xI - M)` by the Berkowitz recursion. The empty matrix gives 1.
pub fn charpoly(m: &IntMatrix) -> IntPolynomial {
    let n = m.dim();
    if n == 0 {
        return IntPolynomial::one();
    }
    // v holds coefficients from the highest power down.
    let mut v = vec![BigInt::one(), -m.get(0, 0)];
    for r in 1..n {
        // Toeplitz column: 1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S
        let mut col = Vec::with_capacity(r + 2);
        col.push(BigInt::one());
        col.push(-m.get(r, r));
        let mut w: Vec<BigInt> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for k in 0..r {
            let dot: BigInt = (0..r)
                .filter(|&j| !w[j].is_zero() && !m.get(r, j).is_zero())
                .map(|j| m.get(r, j) * &w[j])
                .sum();
            col.push(-dot);
            if k + 1 < r {
                w = (0..r)
                    .map(|i| {
                        (0..r)
                            .filter(|&j| !w[j].is_zero() && !m.get(i, j).is_zero())
                            .map(|j| m.get(i, j) * &w[j])
                            .sum()
                    })
                    .collect();
            }
        }
        let next: Vec<BigInt> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r))
                    .filter(|&j| !v[j].is_zero())
                    .map(|j| &col[i - j] * &v[j])
                    .sum()
            })
            .collect();
        v = next;
    }
    v.reverse();
    IntPolynomial::from_coeffs(v)
}

/// Determinant by fraction-free Gaussian elimination with row pivoting.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.dim();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num.div_floor(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `det(xI - M)` recovered from its values at `x = 0..=n`.
pub fn charpoly_by_interpolation(m: &IntMatrix) -> Result<IntPolynomial> {
    let n = m.dim();
    let xs: Vec<BigInt> = (0..=n).map(BigInt::from).collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|k| BigRational::from_integer(determinant(&m.shifted(k))))
        .collect();

    // Newton divided differences, then expand the Newton form.
    let mut dd = ys;
    for level in 1..=n {
        for i in (level..=n).rev() {
            let denom = BigRational::from_integer(&xs[i] - &xs[i - level]);
            dd[i] = (&dd[i] - &dd[i - 1]) / denom;
        }
    }
    let mut coeffs: Vec<BigRational> = vec![BigRational::zero()];
    for i in (0..=n).rev() {
        // coeffs = coeffs * (x - xs[i]) + dd[i]
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        let shift = BigRational::from_integer(xs[i].clone());
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * &shift;
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    let ints = coeffs
        .into_iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::Inconsistent(format!(
                    "interpolated characteristic polynomial has non-integer coefficient {c}"
                )))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPolynomial::from_coeffs(ints))
}

/// Number of spanning trees: any cofactor of the Laplacian.
pub fn spanning_tree_count(g: &Graph) -> BigInt {
    if g.n() == 0 {
        return BigInt::zero();
    }
    determinant(&laplacian(g).delete(&[0]))
}

/// `φ(L_S(G))`: characteristic polynomial of the Laplacian of `G` with the
/// rows and columns of `S` removed. Degrees are those of `G`.
pub fn submatrix_charpoly(g: &Graph, remove: &[usize]) -> Result<IntPolynomial> {
    if let Some(&v) = remove.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    Ok(charpoly(&laplacian(g).delete(remove)))
}

/// `φ(U_n)`, where `U_n` is `L(P_{n+2})` without its two end vertices.
pub fn u_matrix_charpoly(n: i64) -> Result<IntPolynomial> {
    if n < 0 {
        return Err(Error::InvalidParams(format!(
            "U_n is a matrix only for n >= 0, got {n}"
        )));
    }
    let n = n as usize;
    let path = crate::graph::make_path(n + 2)?;
    submatrix_charpoly(&path, &[0, n + 1])
}

/// Simple cycles through `u`, each listed once as a vertex sequence starting
/// at `u`.
pub fn cycles_through(g: &Graph, u: usize) -> Vec<Vec<usize>> {
    let adj = g.adjacency();
    let mut out = Vec::new();
    let mut path = vec![u];
    let mut on_path = vec![false; g.n()];
    on_path[u] = true;

    fn dfs(
        adj: &[Vec<usize>],
        u: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().expect("path starts at u");
        for &w in &adj[last] {
            if w == u && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            }
            if !on_path[w] {
                on_path[w] = true;
                path.push(w);
                dfs(adj, u, path, on_path, out);
                path.pop();
                on_path[w] = false;
            }
        }
    }
    dfs(&adj, u, &mut path, &mut on_path, &mut out);
    out
}

/// Both sides of the vertex-deletion expansion of `φ(L(G))` at a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionFormulaCheck {
    pub vertex: usize,
    pub direct: IntPolynomial,
    pub expanded: IntPolynomial,
    pub neighbor_terms: usize,
    pub cycles: Vec<Vec<usize>>,
}

impl DeletionFormulaCheck {
    pub fn holds(&self) -> bool {
        self.direct == self.expanded
    }
}

/// Expands `φ(L(G))` at `u` as
/// `(x - d(u)) φ(L_u) - Σ_{v ~ u} φ(L_{uv}) - 2 Σ_{Z ∋ u} (-1)^{|Z|} φ(L_Z)`
/// and compares with the direct characteristic polynomial.
pub fn deletion_formula_check(g: &Graph, u: usize) -> Result<DeletionFormulaCheck> {
    if u >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            n: g.n(),
        });
    }
    let lap = laplacian(g);
    let neighbors = g.neighbors(u);
    let degree = neighbors.len() as i64;

    let mut expanded = &IntPolynomial::linear(degree) * &charpoly(&lap.delete(&[u]));
    for &v in &neighbors {
        expanded = &expanded - &charpoly(&lap.delete(&[u, v]));
    }
    let cycles = cycles_through(g, u);
    for z in &cycles {
        let sign = if z.len() % 2 == 0 { 1 } else { -1 };
        let term = charpoly(&lap.delete(z)).scale(&BigInt::from(2 * sign));
        expanded = &expanded - &term;
    }
    Ok(DeletionFormulaCheck {
        vertex: u,
        direct: charpoly(&lap),
        expanded,
        neighbor_terms: neighbors.len(),
        cycles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_cycle, make_path, make_theta, ThetaParams};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn laplacian_examples() {
        let l = laplacian(&make_path(2).unwrap());
        assert_eq!(
            l,
            IntMatrix::from_rows(vec![vec![1, -1], vec![-1, 1]]).unwrap()
        );
        let l = laplacian(&make_cycle(3).unwrap());
        assert_eq!(
            l,
            IntMatrix::from_rows(vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]).unwrap()
        );
        let l = laplacian(&make_theta(ThetaParams::new(1, 1, 1).unwrap()));
        let diag: Vec<i64> = (0..5)
            .map(|i| i64::try_from(l.get(i, i).clone()).unwrap())
            .collect();
        assert_eq!(diag, vec![3, 3, 2, 2, 2]);
        assert!(l.is_symmetric());
        assert!(l.row_sums().iter().all(Zero::is_zero));
    }

    #[test]
    fn charpoly_examples() {
        // det [[x-1, 1], [1, x-1]] = x^2 - 2x
        assert_eq!(charpoly(&laplacian(&make_path(2).unwrap())), p(&[0, -2, 1]));
        // roots 0, 3, 3
        assert_eq!(
            charpoly(&laplacian(&make_cycle(3).unwrap())),
            p(&[0, 9, -6, 1])
        );
        assert_eq!(charpoly(&laplacian(&make_path(1).unwrap())), p(&[0, 1]));
        assert_eq!(charpoly(&IntMatrix::zeros(0)), IntPolynomial::one());
    }

    #[test]
    fn charpoly_non_symmetric_matrix() {
        // [[1,2],[3,4]]: x^2 - 5x - 2
        let m = IntMatrix::from_rows(vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(charpoly(&m), p(&[-2, -5, 1]));
        assert_eq!(charpoly_by_interpolation(&m).unwrap(), p(&[-2, -5, 1]));
        // zero leading entry needs a pivot swap in the elimination route
        let m = IntMatrix::from_rows(vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 2]]).unwrap();
        assert_eq!(determinant(&m), BigInt::from(-2));
        assert_eq!(charpoly(&m), charpoly_by_interpolation(&m).unwrap());
    }

    #[test]
    fn submatrix_examples() {
        let p3 = make_path(3).unwrap();
        assert_eq!(submatrix_charpoly(&p3, &[1]).unwrap(), p(&[1, -2, 1]));
        assert_eq!(
            submatrix_charpoly(&p3, &[]).unwrap(),
            charpoly(&laplacian(&p3))
        );
        assert_eq!(
            submatrix_charpoly(&p3, &[3]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn u_matrix_examples() {
        assert_eq!(u_matrix_charpoly(0).unwrap(), IntPolynomial::one());
        assert_eq!(u_matrix_charpoly(1).unwrap(), p(&[-2, 1]));
        assert_eq!(u_matrix_charpoly(4).unwrap().eval_i64(4), BigInt::from(5));
        assert!(u_matrix_charpoly(-1).is_err());
    }

    #[test]
    fn spanning_trees_small() {
        assert_eq!(
            spanning_tree_count(&make_cycle(5).unwrap()),
            BigInt::from(5)
        );
        assert_eq!(spanning_tree_count(&make_path(4).unwrap()), BigInt::one());
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(spanning_tree_count(&k4), BigInt::from(16));
        assert_eq!(spanning_tree_count(&Graph::empty(3)), BigInt::zero());
    }

    #[test]
    fn cycle_enumeration() {
        assert!(cycles_through(&make_path(3).unwrap(), 0).is_empty());
        assert_eq!(cycles_through(&make_cycle(4).unwrap(), 2).len(), 1);
        let theta = make_theta(ThetaParams::new(1, 1, 1).unwrap());
        assert_eq!(cycles_through(&theta, 0).len(), 3);
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        // 3 triangles and 3 four-cycles through each vertex
        assert_eq!(cycles_through(&k4, 0).len(), 6);
    }

    #[test]
    fn deletion_formula_examples() {
        let check = deletion_formula_check(&make_path(3).unwrap(), 0).unwrap();
        assert!(check.holds());
        assert!(check.cycles.is_empty());
        for u in 0..4 {
            let check = deletion_formula_check(&make_cycle(4).unwrap(), u).unwrap();
            assert!(check.holds());
            assert_eq!(check.cycles.len(), 1);
        }
        let theta = make_theta(ThetaParams::new(1, 1, 1).unwrap());
        let check = deletion_formula_check(&theta, 0).unwrap();
        assert!(check.holds());
        assert_eq!(check.cycles.len(), 3);
        assert!(deletion_formula_check(&theta, 5).is_err());
    }
}
