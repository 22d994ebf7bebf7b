//! Discriminant groups L*/L and their ℚ/2ℤ-valued quadratic forms, with
//! exact enumeration of isotropic subgroups and a decision procedure for
//! form isomorphism below a configurable group-order bound.

use super::{int_json, GramLattice, LatticeError};
use crate::exactnum::{rational_string, Int, QMod2Z, Rational};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::{BTreeSet, HashSet, VecDeque};

/// The finite quadratic form (L*/L, q) of a nondegenerate lattice.
///
/// Generators correspond to the elementary divisors d1 | d2 | ... (each > 1)
/// of the Gram matrix; `lifts` are rational vectors in L⊗ℚ representing the
/// generators, `q` their values in ℚ/2ℤ and `bilin` the pairwise bilinear
/// values mod 1. For even lattices q is independent of the choice of lifts.
#[derive(Clone, Debug)]
pub struct DiscriminantForm {
    orders: Vec<Int>,
    lifts: Vec<Vec<Rational>>,
    q: Vec<QMod2Z>,
    bilin: Vec<Vec<Rational>>,
}

/// An isotropic subgroup of a discriminant form, listed by exhaustive
/// enumeration. `maximal` means not contained in a strictly larger isotropic
/// subgroup.
#[derive(Clone, Debug)]
pub struct IsotropicSubgroup {
    pub order: u64,
    pub generators: Vec<Vec<u64>>,
    pub elements: Vec<Vec<u64>>,
    pub maximal: bool,
}

/// A witness isomorphism between two discriminant forms, recorded as the
/// images of the first form's generators in coordinates of the second.
#[derive(Clone, Debug)]
pub struct FormIsomorphism {
    pub generator_images: Vec<Vec<u64>>,
}

impl FormIsomorphism {
    /// For cyclic groups the witness is multiplication by a unit.
    pub fn cyclic_multiplier(&self) -> Option<u64> {
        if self.generator_images.len() == 1 && self.generator_images[0].len() == 1 {
            Some(self.generator_images[0][0])
        } else {
            None
        }
    }
}

fn frac_mod1(r: &Rational) -> Rational {
    r - r.floor()
}

fn pair_rational(g: &GramLattice, x: &[Rational], y: &[Rational]) -> Rational {
    let n = g.rank();
    let mut acc = Rational::zero();
    for i in 0..n {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if y[j].is_zero() {
                continue;
            }
            acc += &x[i] * Rational::from_integer(g.gram().at(i, j).clone()) * &y[j];
        }
    }
    acc
}

impl DiscriminantForm {
    pub(crate) fn of_lattice(l: &GramLattice) -> Result<Self, LatticeError> {
        if !l.is_nondegenerate() {
            return Err(LatticeError::Degenerate);
        }
        let snf = l.gram().smith_normal_form();
        let n = l.rank();
        let mut orders = Vec::new();
        let mut lifts: Vec<Vec<Rational>> = Vec::new();
        for i in 0..n {
            let d = snf.d.at(i, i);
            if d.is_one() {
                continue;
            }
            orders.push(d.clone());
            let dr = Rational::from_integer(d.clone());
            let lift: Vec<Rational> = (0..n)
                .map(|r| Rational::from_integer(snf.v.at(r, i).clone()) / &dr)
                .collect();
            lifts.push(lift);
        }
        let q: Vec<QMod2Z> = lifts
            .iter()
            .map(|l1| QMod2Z::new(pair_rational(l, l1, l1)))
            .collect();
        let k = orders.len();
        let mut bilin = vec![vec![Rational::zero(); k]; k];
        for i in 0..k {
            for j in 0..k {
                bilin[i][j] = frac_mod1(&pair_rational(l, &lifts[i], &lifts[j]));
            }
        }
        Ok(DiscriminantForm {
            orders,
            lifts,
            q,
            bilin,
        })
    }

    /// Builds a form from generator data. `orders` must be an ascending
    /// divisibility chain of integers > 1, `q` a value per generator and
    /// `bilin` the symmetric matrix of pairwise bilinear values (mod 1).
    /// Consistency demanded: b(g,g) ≡ q(g) mod 1, d·b(g,h) ∈ ℤ and
    /// d² q(g) ∈ 2ℤ where d is the order of g.
    pub fn from_parts(
        orders: Vec<Int>,
        q: Vec<QMod2Z>,
        bilin: Vec<Vec<Rational>>,
    ) -> Result<Self, LatticeError> {
        let k = orders.len();
        let bad = |m: &str| LatticeError::Num(crate::exactnum::NumError::Dimension(m.into()));
        if q.len() != k || bilin.len() != k || bilin.iter().any(|r| r.len() != k) {
            return Err(bad("generator data lengths disagree"));
        }
        for i in 0..k {
            if orders[i] <= Int::one() {
                return Err(bad("orders must be > 1"));
            }
            if i + 1 < k && !(&orders[i + 1] % &orders[i]).is_zero() {
                return Err(bad("orders must form a divisibility chain"));
            }
        }
        let bilin: Vec<Vec<Rational>> = bilin
            .iter()
            .map(|row| row.iter().map(frac_mod1).collect())
            .collect();
        for i in 0..k {
            for j in 0..k {
                if bilin[i][j] != bilin[j][i] {
                    return Err(bad("bilinear matrix must be symmetric mod 1"));
                }
                let d = Rational::from_integer(orders[i].clone());
                if !(&bilin[i][j] * &d).is_integer() {
                    return Err(bad("bilinear value incompatible with generator order"));
                }
            }
            let dd = &orders[i] * &orders[i];
            if !q[i].scale(&dd).is_zero() {
                return Err(bad("q value incompatible with generator order"));
            }
            let diag = frac_mod1(q[i].rep());
            if diag != bilin[i][i] {
                return Err(bad("diagonal bilinear value must be q mod 1"));
            }
        }
        Ok(DiscriminantForm {
            orders,
            lifts: Vec::new(),
            q,
            bilin,
        })
    }

    /// Elementary divisors > 1, ascending under divisibility.
    pub fn orders(&self) -> &[Int] {
        &self.orders
    }

    pub fn generator_count(&self) -> usize {
        self.orders.len()
    }

    pub fn generator_lifts(&self) -> &[Vec<Rational>] {
        &self.lifts
    }

    pub fn q_values(&self) -> &[QMod2Z] {
        &self.q
    }

    pub fn bilinear_values(&self) -> &[Vec<Rational>] {
        &self.bilin
    }

    pub fn group_order(&self) -> Int {
        self.orders.iter().fold(Int::one(), |a, d| a * d)
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    /// q on an arbitrary element given by generator coordinates.
    pub fn q_of(&self, coords: &[Int]) -> QMod2Z {
        let mut acc = QMod2Z::zero();
        for (i, c) in coords.iter().enumerate() {
            acc = acc.add(&self.q[i].scale(&(c * c)));
            for (j, c2) in coords.iter().enumerate().take(i) {
                let cross = Rational::from_integer(c * c2 * 2) * &self.bilin[i][j];
                acc = acc.add(&QMod2Z::new(cross));
            }
        }
        acc
    }

    /// Bilinear pairing mod 1 on coordinate vectors.
    pub fn bilin_of(&self, x: &[Int], y: &[Int]) -> Rational {
        let mut acc = Rational::zero();
        for (i, a) in x.iter().enumerate() {
            for (j, b) in y.iter().enumerate() {
                acc += Rational::from_integer(a * b) * &self.bilin[i][j];
            }
        }
        frac_mod1(&acc)
    }

    fn orders_u64(&self, bound: u64) -> Result<Vec<u64>, LatticeError> {
        let order = self.group_order();
        let fits = order
            .to_u64()
            .filter(|&n| n <= bound)
            .is_some();
        if !fits {
            return Err(LatticeError::EnumerationBound { order, bound });
        }
        Ok(self
            .orders
            .iter()
            .map(|d| d.to_u64().expect("bounded above"))
            .collect())
    }

    fn q_is_zero_at(&self, coords: &[u64]) -> bool {
        let c: Vec<Int> = coords.iter().map(|&x| Int::from(x)).collect();
        self.q_of(&c).is_zero()
    }

    /// All nontrivial subgroups on which q vanishes identically, by exact
    /// enumeration; errors out if the group order exceeds `bound`.
    pub fn isotropic_subgroups(
        &self,
        bound: u64,
    ) -> Result<Vec<IsotropicSubgroup>, LatticeError> {
        let orders = self.orders_u64(bound)?;
        let k = orders.len();
        if k == 0 {
            return Ok(Vec::new());
        }
        let total: u64 = orders.iter().product();

        let encode = |coords: &[u64]| -> u64 {
            let mut idx = 0u64;
            for (i, &c) in coords.iter().enumerate() {
                idx = idx * orders[i] + c;
            }
            idx
        };
        let decode = |mut idx: u64| -> Vec<u64> {
            let mut coords = vec![0u64; k];
            for i in (0..k).rev() {
                coords[i] = idx % orders[i];
                idx /= orders[i];
            }
            coords
        };
        let add = |a: &[u64], b: &[u64]| -> Vec<u64> {
            (0..k).map(|i| (a[i] + b[i]) % orders[i]).collect()
        };

        // The isotropic locus.
        let isotropic: Vec<bool> = (0..total)
            .map(|idx| self.q_is_zero_at(&decode(idx)))
            .collect();
        let iso_elements: Vec<u64> = (1..total).filter(|&i| isotropic[i as usize]).collect();

        // Closure BFS over subgroups contained in the isotropic locus.
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut queue: VecDeque<BTreeSet<u64>> = VecDeque::new();
        let trivial: BTreeSet<u64> = [0u64].into();
        seen.insert(vec![0]);
        queue.push_back(trivial);
        let mut found: Vec<BTreeSet<u64>> = Vec::new();

        while let Some(group) = queue.pop_front() {
            for &z in &iso_elements {
                if group.contains(&z) {
                    continue;
                }
                // Subgroup generated by `group` and z: union of cosets
                // group + m*z until the multiples of z cycle.
                let zc = decode(z);
                let mut bigger: BTreeSet<u64> = BTreeSet::new();
                let mut mz = vec![0u64; k];
                loop {
                    for &g in &group {
                        bigger.insert(encode(&add(&decode(g), &mz)));
                    }
                    mz = add(&mz, &zc);
                    if mz.iter().all(|&c| c == 0) {
                        break;
                    }
                }
                if bigger.iter().any(|&e| !isotropic[e as usize]) {
                    continue;
                }
                let key: Vec<u64> = bigger.iter().copied().collect();
                if seen.insert(key) {
                    queue.push_back(bigger.clone());
                    found.push(bigger);
                }
            }
        }

        // Canonical order and maximality flags.
        let mut sets: Vec<Vec<u64>> = found.iter().map(|s| s.iter().copied().collect()).collect();
        sets.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        let subgroups = sets
            .iter()
            .map(|els| {
                let maximal = !sets.iter().any(|other| {
                    other.len() > els.len() && els.iter().all(|e| other.binary_search(e).is_ok())
                });
                let generators = minimal_generators(els, &decode, &add, k);
                IsotropicSubgroup {
                    order: els.len() as u64,
                    generators,
                    elements: els.iter().map(|&e| decode(e)).collect(),
                    maximal,
                }
            })
            .collect();
        Ok(subgroups)
    }

    /// Searches for a group isomorphism carrying this form to `other`
    /// (preserving q, hence the bilinear form). Exhaustive over generator
    /// images below the bound, with a multiplier fast path for cyclic
    /// groups; `Ok(None)` is a definitive "not isomorphic".
    pub fn isomorphism_to(
        &self,
        other: &DiscriminantForm,
        bound: u64,
    ) -> Result<Option<FormIsomorphism>, LatticeError> {
        if self.orders != other.orders {
            return Ok(None);
        }
        if self.is_trivial() {
            return Ok(Some(FormIsomorphism {
                generator_images: Vec::new(),
            }));
        }
        let orders = self.orders_u64(bound)?;
        let k = orders.len();

        // Cyclic fast path: images of the generator are a*h for units a.
        if k == 1 {
            let n = orders[0];
            for a in 1..n {
                if gcd_u64(a, n) != 1 {
                    continue;
                }
                let qa = other.q_of(&[Int::from(a)]);
                if qa == self.q[0] {
                    return Ok(Some(FormIsomorphism {
                        generator_images: vec![vec![a]],
                    }));
                }
            }
            return Ok(None);
        }

        let total: u64 = orders.iter().product();
        let decode = |mut idx: u64| -> Vec<u64> {
            let mut coords = vec![0u64; k];
            for i in (0..k).rev() {
                coords[i] = idx % orders[i];
                idx /= orders[i];
            }
            coords
        };

        let mut images: Vec<Vec<u64>> = Vec::new();
        if dfs_images(self, other, &orders, total, &decode, &mut images) {
            return Ok(Some(FormIsomorphism {
                generator_images: images,
            }));
        }
        Ok(None)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "orders": self.orders.iter().map(int_json).collect::<Vec<_>>(),
            "q": self
                .q
                .iter()
                .map(|v| serde_json::json!(rational_string(v.rep())))
                .collect::<Vec<_>>(),
            "bilinear": self
                .bilin
                .iter()
                .map(|row| {
                    serde_json::Value::Array(
                        row.iter()
                            .map(|b| serde_json::json!(rational_string(b)))
                            .collect(),
                    )
                })
                .collect::<Vec<_>>(),
        })
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn minimal_generators(
    elements: &[u64],
    decode: &impl Fn(u64) -> Vec<u64>,
    add: &impl Fn(&[u64], &[u64]) -> Vec<u64>,
    k: usize,
) -> Vec<Vec<u64>> {
    let mut gens: Vec<Vec<u64>> = Vec::new();
    let mut span: BTreeSet<Vec<u64>> = [vec![0u64; k]].into();
    for &e in elements {
        let ec = decode(e);
        if span.contains(&ec) {
            continue;
        }
        gens.push(ec.clone());
        // Extend the span by all multiples of ec added to the current span.
        let mut new_span = BTreeSet::new();
        let mut mz = vec![0u64; k];
        loop {
            for s in &span {
                new_span.insert(add(s, &mz));
            }
            mz = add(&mz, &ec);
            if mz.iter().all(|&c| c == 0) {
                break;
            }
        }
        span = new_span;
        if span.len() == elements.len() {
            break;
        }
    }
    gens
}

fn dfs_images(
    source: &DiscriminantForm,
    target: &DiscriminantForm,
    orders: &[u64],
    total: u64,
    decode: &impl Fn(u64) -> Vec<u64>,
    images: &mut Vec<Vec<u64>>,
) -> bool {
    let k = orders.len();
    let pos = images.len();
    if pos == k {
        return images_generate(orders, images) ;
    }
    let d = Int::from(orders[pos]);
    'cand: for idx in 0..total {
        let h = decode(idx);
        let hi: Vec<Int> = h.iter().map(|&x| Int::from(x)).collect();
        // The assignment extends to a homomorphism iff d * h = 0, i.e. the
        // order of h divides the generator's order.
        for (i, &c) in h.iter().enumerate() {
            if ((&d * Int::from(c)) % Int::from(orders[i])) != Int::from(0) {
                continue 'cand;
            }
        }
        if target.q_of(&hi) != source.q_values()[pos] {
            continue;
        }
        let mut ok = true;
        for (j, prev) in images.iter().enumerate() {
            let pj: Vec<Int> = prev.iter().map(|&x| Int::from(x)).collect();
            let want = source.bilin_of(
                &unit_coords(k, pos),
                &unit_coords(k, j),
            );
            if target.bilin_of(&hi, &pj) != want {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        images.push(h);
        if dfs_images(source, target, orders, total, decode, images) {
            return true;
        }
        images.pop();
    }
    false
}

fn unit_coords(k: usize, i: usize) -> Vec<Int> {
    let mut v = vec![Int::from(0); k];
    v[i] = Int::from(1);
    v
}

/// Do the candidate images generate the whole target group?
fn images_generate(orders: &[u64], images: &[Vec<u64>]) -> bool {
    let k = orders.len();
    let total: u64 = orders.iter().product();
    let add = |a: &[u64], b: &[u64]| -> Vec<u64> {
        (0..k).map(|i| (a[i] + b[i]) % orders[i]).collect()
    };
    let mut span: BTreeSet<Vec<u64>> = [vec![0u64; k]].into();
    for g in images {
        let mut new_span = BTreeSet::new();
        let mut mz = vec![0u64; k];
        loop {
            for s in &span {
                new_span.insert(add(s, &mz));
            }
            mz = add(&mz, g);
            if mz.iter().all(|&c| c == 0) {
                break;
            }
        }
        span = new_span;
    }
    span.len() as u64 == total
}

#[cfg(test)]
mod tests {
    use super::super::{hyperbolic_u, lambda_bc, lambda_prime};
    use super::*;
    use crate::exactnum::{int, rat, ratio};

    const BOUND: u64 = 1_000_000;

    #[test]
    fn unimodular_lattices_have_trivial_group() {
        let d = hyperbolic_u().discriminant_form().unwrap();
        assert!(d.is_trivial());
        assert_eq!(d.group_order(), int(1));
        let d2 = lambda_prime().discriminant_form().unwrap();
        assert!(d2.is_trivial());
    }

    #[test]
    fn degenerate_lattice_rejected() {
        let l = GramLattice::new(crate::exactnum::IntMatrix::zeros(2, 2)).unwrap();
        assert!(matches!(
            l.discriminant_form(),
            Err(LatticeError::Degenerate)
        ));
    }

    #[test]
    fn lambda_bc_coprime_is_cyclic_with_expected_q() {
        // gcd(b,2c) = 1: cyclic of order b^2 and some generator has
        // q = -2c/b^2 up to a square unit; check via isomorphism with the
        // reference form.
        for (b, c) in [(3i64, 1i64), (5, 2), (7, 3)] {
            let l = lambda_bc(&int(b), &int(c)).unwrap();
            let d = l.discriminant_form().unwrap();
            assert_eq!(d.orders(), &[int(b * b)]);
            let qref = QMod2Z::new(ratio(-2 * c, b * b));
            let reference = DiscriminantForm::from_parts(
                vec![int(b * b)],
                vec![qref.clone()],
                vec![vec![qref.rep().clone()]],
            )
            .unwrap();
            let iso = d.isomorphism_to(&reference, BOUND).unwrap();
            assert!(iso.is_some(), "({b},{c})");
        }
    }

    #[test]
    fn lambda_20_form() {
        let d = lambda_bc(&int(2), &int(0)).unwrap().discriminant_form().unwrap();
        assert_eq!(d.orders(), &[int(2), int(2)]);
        assert!(d.q_values()[0].is_zero());
        assert!(d.q_values()[1].is_zero());
        assert_eq!(d.bilinear_values()[0][1], ratio(1, 2));
        // q(g1+g2) = 2*b12 = 1 mod 2Z
        assert_eq!(d.q_of(&[int(1), int(1)]), QMod2Z::new(rat(1)));
    }

    #[test]
    fn q_well_defined_for_even_lattices() {
        // Shifting a lift by a lattice vector must not change q mod 2Z.
        let l = lambda_bc(&int(5), &int(2)).unwrap();
        let d = l.discriminant_form().unwrap();
        let lift = &d.generator_lifts()[0];
        let shifted: Vec<Rational> = vec![&lift[0] + rat(3), &lift[1] - rat(7)];
        let q1 = QMod2Z::new(super::pair_rational(&l, lift, lift));
        let q2 = QMod2Z::new(super::pair_rational(&l, &shifted, &shifted));
        assert_eq!(q1, q2);
    }

    #[test]
    fn orders_product_is_det() {
        for (b, c) in [(2i64, 0i64), (5, 2), (6, 3), (9, 3)] {
            let l = lambda_bc(&int(b), &int(c)).unwrap();
            let d = l.discriminant_form().unwrap();
            assert_eq!(d.group_order(), l.det().abs());
        }
    }

    #[test]
    fn isotropic_subgroups_of_half_x2_plus_yz() {
        // q(x,y,z) = x^2/2 + yz on (Z/2)^3: exactly the two subgroups
        // generated by (0,1,0) and (0,0,1).
        let half = ratio(1, 2);
        let form = DiscriminantForm::from_parts(
            vec![int(2), int(2), int(2)],
            vec![QMod2Z::new(half.clone()), QMod2Z::zero(), QMod2Z::zero()],
            vec![
                vec![half, rat(0), rat(0)],
                vec![rat(0), rat(0), ratio(1, 2)],
                vec![rat(0), ratio(1, 2), rat(0)],
            ],
        )
        .unwrap();
        let subs = form.isotropic_subgroups(BOUND).unwrap();
        assert_eq!(subs.len(), 2);
        let gens: Vec<Vec<u64>> = subs.iter().map(|s| s.generators[0].clone()).collect();
        assert!(gens.contains(&vec![0, 1, 0]));
        assert!(gens.contains(&vec![0, 0, 1]));
        assert!(subs.iter().all(|s| s.order == 2 && s.maximal));
    }

    #[test]
    fn unique_isotropic_subgroup_in_cyclic_b2() {
        let d = lambda_bc(&int(5), &int(1)).unwrap().discriminant_form().unwrap();
        let subs = d.isotropic_subgroups(BOUND).unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].order, 5);
        assert!(subs[0].maximal);
    }

    #[test]
    fn two_maximal_isotropics_in_lambda_20() {
        let d = lambda_bc(&int(2), &int(0)).unwrap().discriminant_form().unwrap();
        let subs = d.isotropic_subgroups(BOUND).unwrap();
        let maximal: Vec<_> = subs.iter().filter(|s| s.maximal).collect();
        assert_eq!(maximal.len(), 2);
        assert!(maximal.iter().all(|s| s.order == 2));
    }

    #[test]
    fn cyclic_multiplier_witness() {
        // (cyclic 25, q=-2/25) vs (cyclic 25, q=-8/25): multiplier 2.
        let mk = |c: i64| {
            let q = QMod2Z::new(ratio(-2 * c, 25));
            DiscriminantForm::from_parts(vec![int(25)], vec![q.clone()], vec![vec![q.rep().clone()]])
                .unwrap()
        };
        let d1 = mk(1);
        let d4 = mk(4);
        let d2 = mk(2);
        let iso = d1.isomorphism_to(&d4, BOUND).unwrap().unwrap();
        assert_eq!(iso.cyclic_multiplier(), Some(2));
        assert!(d1.isomorphism_to(&d2, BOUND).unwrap().is_none());
        // identity on itself
        let selfiso = d1.isomorphism_to(&d1, BOUND).unwrap().unwrap();
        assert_eq!(selfiso.cyclic_multiplier(), Some(1));
    }

    #[test]
    fn enumeration_bound_is_honest() {
        let d = lambda_bc(&int(2000), &int(1)).unwrap().discriminant_form().unwrap();
        assert!(matches!(
            d.isotropic_subgroups(1000),
            Err(LatticeError::EnumerationBound { .. })
        ));
    }

    #[test]
    fn direct_sum_q_multiset() {
        // q-values over L1 + L2 equal all pairwise sums of the factors'.
        let l1 = lambda_bc(&int(2), &int(0)).unwrap();
        let l2 = lambda_bc(&int(3), &int(1)).unwrap();
        let sum = l1.direct_sum(&l2);
        let d1 = l1.discriminant_form().unwrap();
        let d2 = l2.discriminant_form().unwrap();
        let ds = sum.discriminant_form().unwrap();
        let all = |d: &DiscriminantForm| -> Vec<QMod2Z> {
            let orders: Vec<u64> = d
                .orders()
                .iter()
                .map(|o| o.to_u64().unwrap())
                .collect();
            let total: u64 = orders.iter().product();
            (0..total)
                .map(|mut idx| {
                    let mut coords = vec![Int::from(0); orders.len()];
                    for i in (0..orders.len()).rev() {
                        coords[i] = Int::from(idx % orders[i]);
                        idx /= orders[i];
                    }
                    d.q_of(&coords)
                })
                .collect()
        };
        let mut lhs: Vec<String> = all(&ds).iter().map(|q| q.to_string()).collect();
        let mut rhs: Vec<String> = all(&d1)
            .iter()
            .flat_map(|a| all(&d2).iter().map(|b| a.add(b).to_string()).collect::<Vec<_>>())
            .collect();
        lhs.sort();
        rhs.sort();
        assert_eq!(lhs, rhs);
    }
}
