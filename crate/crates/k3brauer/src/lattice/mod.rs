//! Integer lattices with symmetric Gram matrices.
//!
//! A lattice here is a free ℤ-module of finite rank together with an integer
//! symmetric bilinear form, carried by its Gram matrix. The module provides
//! the standard lattices of K3 theory (the hyperbolic plane U, E8(−1), the
//! K3 lattice U³⊕E8(−1)², the rank-two family Λ_{b,c} and its rank-20
//! companion Γ_{b,c} = Λ_{b,c}⊕U⊕E8(−1)²), kernels of characters, orthogonal
//! complements with saturated bases, and discriminant groups with their
//! ℚ/2ℤ-valued quadratic forms.

mod disc;

pub use disc::{DiscriminantForm, FormIsomorphism, IsotropicSubgroup};

use crate::exactnum::{hnf_basis_columns, int, Int, IntMatrix, NumError, Rational};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("Gram matrix must be square and symmetric")]
    NotSymmetric,
    #[error("lattice is degenerate (det = 0)")]
    Degenerate,
    #[error("character is identically zero mod {0}")]
    ZeroCharacter(Int),
    #[error("character modulus must be at least 2, got {0}")]
    BadModulus(Int),
    #[error("character has {got} values, lattice rank is {rank}")]
    CharacterLength { got: usize, rank: usize },
    #[error("sublattice basis vectors are dependent")]
    DependentBasis,
    #[error("parameter b must be nonzero")]
    ZeroB,
    #[error("lattice is odd; the discriminant quadratic form needs an even lattice")]
    OddLattice,
    #[error("group order {order} exceeds the enumeration bound {bound}; raise the bound")]
    EnumerationBound { order: Int, bound: u64 },
    #[error(transparent)]
    Num(#[from] NumError),
}

/// A free ℤ-module with an integer symmetric bilinear form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GramLattice {
    gram: IntMatrix,
}

impl GramLattice {
    pub fn new(gram: IntMatrix) -> Result<Self, LatticeError> {
        if !gram.is_symmetric() {
            return Err(LatticeError::NotSymmetric);
        }
        Ok(GramLattice { gram })
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn det(&self) -> Int {
        self.gram.det().expect("square by construction")
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.det().is_zero()
    }

    /// Even means every self-pairing is even; it suffices to check the
    /// diagonal of the Gram matrix.
    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram.at(i, i).is_even())
    }

    /// The same module with the negated form.
    pub fn negated(&self) -> Self {
        GramLattice {
            gram: self.gram.neg(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        GramLattice {
            gram: IntMatrix::block_diag(&[&self.gram, &other.gram]),
        }
    }

    /// `<v, w>` for coordinate vectors in the lattice basis.
    pub fn pair(&self, v: &[Int], w: &[Int]) -> Int {
        self.gram.pair(v, w).expect("rank-checked by callers")
    }

    pub fn norm(&self, v: &[Int]) -> Int {
        self.pair(v, v)
    }

    /// Signature `(n_plus, n_minus, n_zero)` by exact rational symmetric
    /// Gaussian congruence; no floating point is involved.
    pub fn signature(&self) -> (usize, usize, usize) {
        let n = self.rank();
        let mut a: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Rational::from_integer(self.gram.at(i, j).clone()))
                    .collect()
            })
            .collect();
        let (mut plus, mut minus, mut zero) = (0usize, 0usize, 0usize);
        for k in 0..n {
            if a[k][k].is_zero() {
                // Prefer bringing a nonzero diagonal entry up, else create
                // one from the first nonzero off-diagonal entry in row k.
                if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                    a.swap(k, j);
                    for row in a.iter_mut() {
                        row.swap(k, j);
                    }
                } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                    for i in 0..n {
                        let t = a[i][j].clone();
                        a[i][k] += t;
                    }
                    for j2 in 0..n {
                        let t = a[j][j2].clone();
                        a[k][j2] += t;
                    }
                } else {
                    zero += 1;
                    continue;
                }
            }
            let pivot = a[k][k].clone();
            if pivot.is_positive() {
                plus += 1;
            } else {
                minus += 1;
            }
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &pivot;
                for j in k..n {
                    let sub = &f * &a[k][j];
                    a[i][j] -= sub;
                }
                for j in k..n {
                    let sub = &f * &a[j][k].clone();
                    a[j][i] -= sub;
                }
            }
        }
        (plus, minus, zero)
    }

    /// Discriminant group L*/L with its ℚ/2ℤ-valued quadratic form.
    pub fn discriminant_form(&self) -> Result<DiscriminantForm, LatticeError> {
        DiscriminantForm::of_lattice(self)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "rank": self.rank(),
            "gram": gram_json(&self.gram),
        })
    }
}

pub(crate) fn gram_json(m: &IntMatrix) -> serde_json::Value {
    let rows: Vec<serde_json::Value> = (0..m.rows())
        .map(|i| {
            serde_json::Value::Array(m.row(i).iter().map(int_json).collect())
        })
        .collect();
    serde_json::Value::Array(rows)
}

pub(crate) fn int_json(x: &Int) -> serde_json::Value {
    match i64::try_from(x.clone()) {
        Ok(v) => serde_json::json!(v),
        Err(_) => serde_json::json!(x.to_string()),
    }
}

/// The hyperbolic plane U, Gram [[0,1],[1,0]].
pub fn hyperbolic_u() -> GramLattice {
    GramLattice::new(IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]])).unwrap()
}

/// The negative-definite E8 root lattice: even, unimodular, signature (0,8).
/// Basis ordered along the Dynkin diagram 1−3−4−5−6−7−8 with node 2
/// attached to node 4.
pub fn e8_minus_one() -> GramLattice {
    let edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
    let mut g = IntMatrix::zeros(8, 8);
    for i in 0..8 {
        *g.at_mut(i, i) = int(-2);
    }
    for (a, b) in edges {
        *g.at_mut(a, b) = int(1);
        *g.at_mut(b, a) = int(1);
    }
    GramLattice::new(g).unwrap()
}

/// The K3 lattice U³ ⊕ E8(−1)², rank 22.
pub fn lambda_k3() -> GramLattice {
    let u = hyperbolic_u();
    let e = e8_minus_one();
    u.direct_sum(&u).direct_sum(&u).direct_sum(&e).direct_sum(&e)
}

/// U² ⊕ E8(−1)², rank 20: the transcendental lattice of a general elliptic
/// K3 surface, and also the complement Λ′ of a copy of U in the K3 lattice.
pub fn lambda_prime() -> GramLattice {
    let u = hyperbolic_u();
    let e = e8_minus_one();
    u.direct_sum(&u).direct_sum(&e).direct_sum(&e)
}

/// Rank-one lattice ⟨n⟩.
pub fn rank1(n: Int) -> GramLattice {
    GramLattice::new(IntMatrix::new(1, 1, vec![n]).unwrap()).unwrap()
}

/// The rank-two lattice Λ_{b,c} with Gram [[0,b],[b,2c]]; b must be nonzero.
pub fn lambda_bc(b: &Int, c: &Int) -> Result<GramLattice, LatticeError> {
    if b.is_zero() {
        return Err(LatticeError::ZeroB);
    }
    let g = IntMatrix::from_rows(&[
        vec![Int::zero(), b.clone()],
        vec![b.clone(), c * 2],
    ])?;
    GramLattice::new(g)
}

/// Γ_{b,c} = Λ_{b,c} ⊕ U ⊕ E8(−1)², rank 20.
pub fn gamma_bc(b: &Int, c: &Int) -> Result<GramLattice, LatticeError> {
    Ok(lambda_bc(b, c)?
        .direct_sum(&hyperbolic_u())
        .direct_sum(&e8_minus_one())
        .direct_sum(&e8_minus_one()))
}

/// ⟨−2d⟩ ⊕ U² ⊕ E8(−1)², rank 21: the transcendental lattice of a K3
/// surface with Néron–Severi group ℤh, h² = 2d.
pub fn t_polarized(d: &Int) -> GramLattice {
    rank1(-(d * 2)).direct_sum(&lambda_prime())
}

/// Named standard lattices, including the parametrized families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardLattice {
    U,
    E8Minus1,
    LambdaK3,
    LambdaPrime,
    /// Alias for U²⊕E8(−1)² in its role as the transcendental lattice of an
    /// elliptic K3 surface.
    Gamma,
    Rank1(Int),
    LambdaBc(Int, Int),
    GammaBc(Int, Int),
    /// ⟨−2d⟩⊕U²⊕E8(−1)² for a polarization of degree 2d.
    TPolarized(Int),
}

pub fn standard_lattice(which: &StandardLattice) -> Result<GramLattice, LatticeError> {
    match which {
        StandardLattice::U => Ok(hyperbolic_u()),
        StandardLattice::E8Minus1 => Ok(e8_minus_one()),
        StandardLattice::LambdaK3 => Ok(lambda_k3()),
        StandardLattice::LambdaPrime | StandardLattice::Gamma => Ok(lambda_prime()),
        StandardLattice::Rank1(n) => Ok(rank1(n.clone())),
        StandardLattice::LambdaBc(b, c) => lambda_bc(b, c),
        StandardLattice::GammaBc(b, c) => gamma_bc(b, c),
        StandardLattice::TPolarized(d) => Ok(t_polarized(d)),
    }
}

/// Parses names like "U", "E8_MINUS_1", "LAMBDA_K3", "LAMBDA_PRIME",
/// "GAMMA", "RANK1:-4", "LAMBDA_BC:5,2", "GAMMA_BC:5,2", "T_2D:1".
pub fn parse_lattice_name(name: &str) -> Result<StandardLattice, String> {
    let (head, args) = match name.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (name, None),
    };
    let two_args = |a: Option<&str>| -> Result<(Int, Int), String> {
        let a = a.ok_or_else(|| format!("{head} needs parameters, e.g. {head}:5,2"))?;
        let parts: Vec<&str> = a.split(',').collect();
        if parts.len() != 2 {
            return Err(format!("{head} needs two integer parameters"));
        }
        let b = parts[0].trim().parse().map_err(|_| "bad integer".to_string())?;
        let c = parts[1].trim().parse().map_err(|_| "bad integer".to_string())?;
        Ok((b, c))
    };
    let one_arg = |a: Option<&str>| -> Result<Int, String> {
        let a = a.ok_or_else(|| format!("{head} needs a parameter, e.g. {head}:2"))?;
        a.trim().parse().map_err(|_| "bad integer".to_string())
    };
    match head {
        "U" => Ok(StandardLattice::U),
        "E8_MINUS_1" => Ok(StandardLattice::E8Minus1),
        "LAMBDA_K3" => Ok(StandardLattice::LambdaK3),
        "LAMBDA_PRIME" => Ok(StandardLattice::LambdaPrime),
        "GAMMA" => Ok(StandardLattice::Gamma),
        "RANK1" => Ok(StandardLattice::Rank1(one_arg(args)?)),
        "LAMBDA_BC" => {
            let (b, c) = two_args(args)?;
            Ok(StandardLattice::LambdaBc(b, c))
        }
        "GAMMA_BC" => {
            let (b, c) = two_args(args)?;
            Ok(StandardLattice::GammaBc(b, c))
        }
        "T_2D" => Ok(StandardLattice::TPolarized(one_arg(args)?)),
        other => Err(format!("unknown lattice name {other:?}")),
    }
}

/// A homomorphism L → ℤ/nℤ given by its values on the basis.
#[derive(Clone, Debug)]
pub struct Character {
    modulus: Int,
    values: Vec<Int>,
}

impl Character {
    pub fn new(modulus: Int, values: Vec<Int>) -> Result<Self, LatticeError> {
        if modulus < int(2) {
            return Err(LatticeError::BadModulus(modulus));
        }
        let values = values.into_iter().map(|v| v.mod_floor(&modulus)).collect();
        Ok(Character { modulus, values })
    }

    /// The character x ↦ ⟨x, gamma⟩ mod n determined by a lattice vector.
    pub fn from_vector(l: &GramLattice, gamma: &[Int], modulus: Int) -> Result<Self, LatticeError> {
        if gamma.len() != l.rank() {
            return Err(LatticeError::CharacterLength {
                got: gamma.len(),
                rank: l.rank(),
            });
        }
        let values = (0..l.rank())
            .map(|j| {
                let mut acc = Int::zero();
                for (i, g) in gamma.iter().enumerate() {
                    acc += g * l.gram().at(i, j);
                }
                acc
            })
            .collect();
        Character::new(modulus, values)
    }

    pub fn modulus(&self) -> &Int {
        &self.modulus
    }

    pub fn values(&self) -> &[Int] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Order of the image subgroup of ℤ/n.
    pub fn image_order(&self) -> Int {
        let mut g = self.modulus.clone();
        for v in &self.values {
            g = g.gcd(v);
        }
        &self.modulus / g
    }
}

/// A sublattice presented by a basis in the coordinates of its ambient
/// lattice, together with the restricted Gram matrix.
#[derive(Clone, Debug)]
pub struct Sublattice {
    /// Columns are basis vectors in ambient coordinates, in canonical
    /// Hermite form.
    pub basis: IntMatrix,
    pub lattice: GramLattice,
    /// Index in the ambient lattice when finite (kernel construction).
    pub index: Option<Int>,
}

fn restricted_gram(ambient: &GramLattice, basis: &IntMatrix) -> Result<GramLattice, LatticeError> {
    let bt = basis.transpose();
    let g = bt.mul(ambient.gram())?.mul(basis)?;
    GramLattice::new(g)
}

/// Kernel of a character: the sublattice {x : χ(x) ≡ 0 mod n} with basis in
/// canonical Hermite form. Its index in L is the order of the image of χ.
pub fn kernel_sublattice(l: &GramLattice, chi: &Character) -> Result<Sublattice, LatticeError> {
    if chi.values().len() != l.rank() {
        return Err(LatticeError::CharacterLength {
            got: chi.values().len(),
            rank: l.rank(),
        });
    }
    if chi.is_zero() {
        return Err(LatticeError::ZeroCharacter(chi.modulus().clone()));
    }
    let n = l.rank();
    // Kernel of the 1 x (n+1) matrix [v1 .. vn | -modulus]; the projection to
    // the first n coordinates is injective on it.
    let mut row = chi.values().to_vec();
    row.push(-chi.modulus().clone());
    let a = IntMatrix::from_rows(&[row])?;
    let big_kernel = a.kernel_basis();
    let mut basis = IntMatrix::zeros(n, big_kernel.cols());
    for j in 0..big_kernel.cols() {
        for i in 0..n {
            *basis.at_mut(i, j) = big_kernel.at(i, j).clone();
        }
    }
    let basis = hnf_basis_columns(&basis);
    let lattice = restricted_gram(l, &basis)?;
    Ok(Sublattice {
        basis,
        lattice,
        index: Some(chi.image_order()),
    })
}

/// Orthogonal complement of the span of `sub_basis` (columns) in `ambient`.
/// The result is saturated (a primitive sublattice) and its basis is in
/// canonical Hermite form.
pub fn orthogonal_complement(
    ambient: &GramLattice,
    sub_basis: &IntMatrix,
) -> Result<Sublattice, LatticeError> {
    if sub_basis.rows() != ambient.rank() {
        return Err(NumError::Dimension("sub-basis rows must equal ambient rank".into()).into());
    }
    if sub_basis.rank() != sub_basis.cols() {
        return Err(LatticeError::DependentBasis);
    }
    let a = sub_basis.transpose().mul(ambient.gram())?;
    let basis = a.kernel_basis();
    let lattice = restricted_gram(ambient, &basis)?;
    Ok(Sublattice {
        basis,
        lattice,
        index: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn standard_gram_matrices() {
        assert_eq!(hyperbolic_u().gram(), &IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]));
        let l20 = lambda_bc(&int(2), &int(0)).unwrap();
        assert_eq!(l20.gram(), &IntMatrix::from_i64_rows(&[&[0, 2], &[2, 0]]));
        assert!(lambda_bc(&int(0), &int(1)).is_err());
        let g = gamma_bc(&int(5), &int(2)).unwrap();
        assert_eq!(g.rank(), 20);
        assert_eq!(g.gram().at(0, 1), &int(5));
        assert_eq!(g.gram().at(1, 1), &int(4));
    }

    #[test]
    fn e8_is_even_unimodular_negative_definite() {
        let e = e8_minus_one();
        assert!(e.is_even());
        assert_eq!(e.det(), int(1));
        assert_eq!(e.signature(), (0, 8, 0));
    }

    #[test]
    fn k3_lattice_shape() {
        let k3 = lambda_k3();
        assert_eq!(k3.rank(), 22);
        assert_eq!(k3.det(), int(-1));
        assert_eq!(k3.signature(), (3, 19, 0));
        let lp = lambda_prime();
        assert_eq!(lp.rank(), 20);
        assert_eq!(lp.signature(), (2, 18, 0));
        assert_eq!(t_polarized(&int(1)).signature(), (2, 19, 0));
    }

    #[test]
    fn signature_of_indefinite_rank2() {
        let l = lambda_bc(&int(5), &int(2)).unwrap();
        assert_eq!(l.signature(), (1, 1, 0));
        let z = GramLattice::new(IntMatrix::zeros(2, 2)).unwrap();
        assert_eq!(z.signature(), (0, 0, 2));
    }

    #[test]
    fn kernel_of_mod2_character_on_u() {
        // chi = <., (1,-1)> mod 2 on U; kernel has det -4 and is isometric
        // to diag(2,-2) (basis f1+f2, f1-f2 in hand coordinates).
        let u = hyperbolic_u();
        let chi = Character::from_vector(&u, &[int(1), int(-1)], int(2)).unwrap();
        let k = kernel_sublattice(&u, &chi).unwrap();
        assert_eq!(k.index, Some(int(2)));
        assert_eq!(k.lattice.det(), int(-4));
        assert_eq!(k.lattice.signature(), (1, 1, 0));
        // Index-determinant law: det multiplied by n^2.
        assert_eq!(k.lattice.det().abs(), u.det().abs() * 4);
    }

    #[test]
    fn kernel_rejects_zero_character() {
        let u = hyperbolic_u();
        let chi = Character::new(int(2), vec![int(0), int(2)]).unwrap();
        assert!(chi.is_zero());
        assert!(kernel_sublattice(&u, &chi).is_err());
    }

    #[test]
    fn kernel_index_three() {
        let g = lambda_prime();
        let mut gamma = vec![int(0); 20];
        gamma[0] = int(1); // primitive vector e1 of the first U
        let chi = Character::from_vector(&g, &gamma, int(3)).unwrap();
        let k = kernel_sublattice(&g, &chi).unwrap();
        assert_eq!(k.index, Some(int(3)));
        assert_eq!(k.lattice.det().abs(), g.det().abs() * 9);
    }

    #[test]
    fn complement_in_u_of_diagonal_vector() {
        let u = hyperbolic_u();
        let sub = IntMatrix::from_i64_rows(&[&[1], &[1]]);
        let c = orthogonal_complement(&u, &sub).unwrap();
        assert_eq!(c.lattice.gram(), &IntMatrix::from_i64_rows(&[&[-2]]));
    }

    #[test]
    fn complement_rejects_dependent_basis() {
        let u = hyperbolic_u();
        let sub = IntMatrix::from_i64_rows(&[&[1, 2], &[1, 2]]);
        assert!(matches!(
            orthogonal_complement(&u, &sub),
            Err(LatticeError::DependentBasis)
        ));
    }

    #[test]
    fn standard_embedding_complement_pattern() {
        // e1 -> ((1,0),(b,0)), e2 -> ((0,0),(2c,1)) in U^2; the complement
        // has Gram (0,-b,-4c) on the canonical basis.
        for (b, c) in [(2i64, 1i64), (3, 1), (7, 4)] {
            let ambient = hyperbolic_u().direct_sum(&hyperbolic_u());
            let sub = IntMatrix::from_i64_rows(&[&[1, 0], &[0, 0], &[b, 2 * c], &[0, 1]]);
            let comp = orthogonal_complement(&ambient, &sub).unwrap();
            let expected =
                IntMatrix::from_i64_rows(&[&[0, -b], &[-b, -4 * c]]);
            assert_eq!(comp.lattice.gram(), &expected, "(b,c)=({b},{c})");
        }
    }

    #[test]
    fn lattice_json_round_shape() {
        let j = hyperbolic_u().to_json();
        assert_eq!(j["rank"], 2);
        assert_eq!(j["gram"][0][1], 1);
    }

    #[test]
    fn parse_names() {
        assert_eq!(parse_lattice_name("U").unwrap(), StandardLattice::U);
        assert_eq!(
            parse_lattice_name("LAMBDA_BC:5,2").unwrap(),
            StandardLattice::LambdaBc(int(5), int(2))
        );
        assert!(parse_lattice_name("NOPE").is_err());
        assert!(parse_lattice_name("LAMBDA_BC").is_err());
    }

    #[test]
    fn pairing_and_norm() {
        let u = hyperbolic_u();
        assert_eq!(u.norm(&[int(1), int(1)]), int(2));
        assert_eq!(u.pair(&[int(1), int(0)], &[int(0), int(1)]), int(1));
        let _ = rat(0); // keep import used in cfg(test)
    }
}
