//! Finite simple root systems of types A-G.
//!
//! A [`RootDatum`] carries the Cartan matrix, a symmetrizer, the full list of
//! positive roots, the highest root, the dual Coxeter number and the invariant
//! bilinear form normalized so that the highest root has squared length 2.
//! Weights live in fundamental-weight coordinates, roots in simple-root
//! coordinates; the conversion matrices are stored on the datum.

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::polyring::{frac, rat, LinearForm, Rat};

/// The seven families of finite simple root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(&self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A root in simple-root coordinates (integer vector of length `rank`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Sum of simple-root coordinates.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    /// The i-th simple root (0-indexed).
    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0i64; rank];
        v[i] = 1;
        Root(v)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // e.g. "alpha1", "-alpha2", "alpha1+2alpha3"
        if self.0.iter().all(|&c| c == 0) {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c > 0 { "+" } else { "-" })?;
            }
            let a = c.unsigned_abs();
            if a != 1 {
                write!(f, "{a}")?;
            }
            write!(f, "alpha{}", i + 1)?;
            first = false;
        }
        Ok(())
    }
}

/// A finite weight in fundamental-weight coordinates.
///
/// Coordinate `i` is the pairing with the i-th simple coroot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteWeight(pub Vec<Rat>);

impl FiniteWeight {
    pub fn zero(rank: usize) -> FiniteWeight {
        FiniteWeight(vec![Rat::zero(); rank])
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &FiniteWeight) -> FiniteWeight {
        debug_assert_eq!(self.0.len(), other.0.len());
        FiniteWeight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &FiniteWeight) -> FiniteWeight {
        debug_assert_eq!(self.0.len(), other.0.len());
        FiniteWeight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Rat) -> FiniteWeight {
        FiniteWeight(self.0.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> FiniteWeight {
        FiniteWeight(self.0.iter().map(|a| -a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|a| a.is_zero())
    }
}

/// Cartan matrix plus symmetrizer for a simple type.
///
/// Convention: `cartan[i][j]` is the pairing of the j-th simple root with the
/// i-th simple coroot, so `symmetrizer[i] * cartan[i][j]` is the symmetric
/// matrix of the invariant form on simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    pub family: Family,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub symmetrizer: Vec<Rat>,
}

/// A finite root datum: Cartan data, positive roots, highest root, rho, the
/// dual Coxeter number and the invariant form with `(theta|theta) = 2`.
#[derive(Debug, Clone)]
pub struct RootDatum {
    datum: CartanDatum,
    positive_roots: Vec<Root>,
    root_set: HashSet<Vec<i64>>,
    highest_root: usize,
    rho_finite: FiniteWeight,
    dual_coxeter: i64,
    /// Gram matrix of the invariant form on simple roots.
    form_gram: Vec<Vec<Rat>>,
    /// Inverse Cartan matrix (converts fundamental-weight to simple-root coordinates).
    cartan_inv: Vec<Vec<Rat>>,
    /// Gram matrix of the invariant form on fundamental weights.
    weight_gram: Vec<Vec<Rat>>,
}

/// Squared lengths of the simple roots, normalized so long roots have
/// squared length 2. Short roots get 1 (double bond) or 2/3 (triple bond).
fn simple_root_lengths(family: Family, rank: usize) -> Result<Vec<Rat>, Error> {
    let invalid = |reason: &str| Error::InvalidType {
        family: family.letter().to_string(),
        rank,
        reason: reason.to_string(),
    };
    let long = rat(2);
    match family {
        Family::A => {
            if rank < 1 {
                return Err(invalid("rank must be at least 1"));
            }
            Ok(vec![long; rank])
        }
        Family::B => {
            if rank < 2 {
                return Err(invalid("rank must be at least 2"));
            }
            let mut v = vec![long; rank];
            v[rank - 1] = rat(1);
            Ok(v)
        }
        Family::C => {
            if rank < 2 {
                return Err(invalid("rank must be at least 2"));
            }
            let mut v = vec![rat(1); rank];
            v[rank - 1] = long;
            Ok(v)
        }
        Family::D => {
            if rank < 4 {
                return Err(invalid("rank must be at least 4"));
            }
            Ok(vec![long; rank])
        }
        Family::E => {
            if !(6..=8).contains(&rank) {
                return Err(invalid("rank must be 6, 7 or 8"));
            }
            Ok(vec![long; rank])
        }
        Family::F => {
            if rank != 4 {
                return Err(invalid("rank must be 4"));
            }
            Ok(vec![long.clone(), long, rat(1), rat(1)])
        }
        Family::G => {
            if rank != 2 {
                return Err(invalid("rank must be 2"));
            }
            Ok(vec![frac(2, 3), long])
        }
    }
}

/// Dynkin diagram edges (0-indexed node pairs).
fn dynkin_edges(family: Family, rank: usize) -> Vec<(usize, usize)> {
    match family {
        Family::A | Family::B | Family::C | Family::F | Family::G => {
            (0..rank - 1).map(|i| (i, i + 1)).collect()
        }
        Family::D => {
            let mut e: Vec<_> = (0..rank - 2).map(|i| (i, i + 1)).collect();
            e.push((rank - 3, rank - 1));
            e
        }
        Family::E => {
            // chain 1-3-4-5(-6(-7)), branch node 2 attached to 4 (Bourbaki labels)
            let mut e = vec![(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
            if rank >= 7 {
                e.push((5, 6));
            }
            if rank == 8 {
                e.push((6, 7));
            }
            e
        }
    }
}

impl RootDatum {
    /// Build the root datum for a valid simple type.
    ///
    /// Positive roots are generated from the simple roots by root strings and
    /// sorted graded-lexicographically by simple-root coordinates, so the
    /// ordering is reproducible.
    pub fn new(family: Family, rank: usize) -> Result<RootDatum, Error> {
        let lengths = simple_root_lengths(family, rank)?;
        let edges = dynkin_edges(family, rank);

        // cartan[i][j] = 2(alpha_i|alpha_j)/(alpha_i|alpha_i); for adjacent
        // nodes this is -1 when alpha_i is at least as long as alpha_j and
        // -(length ratio) when alpha_i is strictly shorter.
        let mut cartan = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            cartan[i][i] = 2;
        }
        for &(i, j) in &edges {
            let ratio_ij = &lengths[j] / &lengths[i];
            let ratio_ji = &lengths[i] / &lengths[j];
            cartan[i][j] = -rat_to_i64_max1(&ratio_ij);
            cartan[j][i] = -rat_to_i64_max1(&ratio_ji);
        }

        let symmetrizer: Vec<Rat> = lengths.iter().map(|l| l / rat(2)).collect();
        let mut form_gram = vec![vec![Rat::zero(); rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                form_gram[i][j] = &symmetrizer[i] * rat(cartan[i][j]);
            }
        }

        let datum = CartanDatum {
            family,
            rank,
            cartan,
            symmetrizer,
        };

        let positive_roots = generate_positive_roots(&datum);
        let root_set: HashSet<Vec<i64>> = positive_roots
            .iter()
            .flat_map(|r| [r.0.clone(), r.negated().0])
            .collect();

        // The highest root is the unique positive root of maximal height.
        let highest_root = positive_roots
            .iter()
            .enumerate()
            .max_by_key(|(_, r)| r.height())
            .map(|(i, _)| i)
            .expect("nonempty root system");

        let theta = &positive_roots[highest_root];
        let theta_norm = norm_sq_in(&form_gram, theta);
        if theta_norm != rat(2) {
            // cannot happen for the families above; guards the length tables
            return Err(Error::Dimension(format!(
                "highest root has squared length {theta_norm}, expected 2"
            )));
        }

        // theta-vee = sum of comark_i * alpha_i-vee with comark_i = b_i * d_i.
        let mut dual_coxeter = 1i64;
        for (i, &b) in theta.0.iter().enumerate() {
            let comark = rat(b) * &datum.symmetrizer[i];
            debug_assert!(comark.is_integer());
            dual_coxeter += comark.to_integer().try_into().unwrap_or(0i64);
        }

        let cartan_rat: Vec<Vec<Rat>> = datum
            .cartan
            .iter()
            .map(|row| row.iter().map(|&c| rat(c)).collect())
            .collect();
        let cartan_inv = invert_matrix(&cartan_rat)
            .ok_or_else(|| Error::Dimension("Cartan matrix is singular".into()))?;

        // (omega_i|omega_j) = (C^-1)_{ji} * d_j
        let mut weight_gram = vec![vec![Rat::zero(); rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                weight_gram[i][j] = &cartan_inv[j][i] * &datum.symmetrizer[j];
            }
        }

        Ok(RootDatum {
            datum,
            positive_roots,
            root_set,
            highest_root,
            rho_finite: FiniteWeight(vec![Rat::one(); rank]),
            dual_coxeter,
            form_gram,
            cartan_inv,
            weight_gram,
        })
    }

    /// Parse a combined type string such as `"A2"` or `"G2"`.
    pub fn from_type_string(s: &str) -> Result<RootDatum, Error> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Parse("empty type string".into()))?;
        let family = Family::from_letter(letter).ok_or_else(|| Error::InvalidType {
            family: letter.to_string(),
            rank: 0,
            reason: "unknown family letter".to_string(),
        })?;
        let rest: String = chars.collect();
        let rank: usize = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in type string {s:?}")))?;
        RootDatum::new(family, rank)
    }

    pub fn family(&self) -> Family {
        self.datum.family
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn type_string(&self) -> String {
        format!("{}{}", self.datum.family, self.datum.rank)
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn highest_root(&self) -> &Root {
        &self.positive_roots[self.highest_root]
    }

    /// rho in fundamental-weight coordinates: all ones.
    pub fn rho(&self) -> &FiniteWeight {
        &self.rho_finite
    }

    pub fn dual_coxeter(&self) -> i64 {
        self.dual_coxeter
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.root_set.contains(&r.0)
    }

    pub fn is_positive_root(&self, r: &Root) -> bool {
        r.is_positive() && self.is_root(r)
    }

    /// Gram matrix of the invariant form on simple roots.
    pub fn form_gram(&self) -> &[Vec<Rat>] {
        &self.form_gram
    }

    /// Gram matrix of the invariant form on fundamental weights.
    pub fn weight_gram(&self) -> &[Vec<Rat>] {
        &self.weight_gram
    }

    /// Squared length of a root.
    pub fn norm_sq(&self, alpha: &Root) -> Rat {
        norm_sq_in(&self.form_gram, alpha)
    }

    /// Invariant form on finite weights (fundamental-weight coordinates).
    pub fn form_weights(&self, xi: &FiniteWeight, eta: &FiniteWeight) -> Rat {
        let mut acc = Rat::zero();
        for (i, xi_i) in xi.0.iter().enumerate() {
            for (j, eta_j) in eta.0.iter().enumerate() {
                acc += xi_i * &self.weight_gram[i][j] * eta_j;
            }
        }
        acc
    }

    /// Fundamental-weight coordinates of a root: the Cartan matrix applied to
    /// its simple-root coordinates.
    pub fn root_weight(&self, alpha: &Root) -> FiniteWeight {
        let rank = self.rank();
        let mut out = vec![Rat::zero(); rank];
        for (i, o) in out.iter_mut().enumerate() {
            let mut acc = Rat::zero();
            for (j, &b) in alpha.0.iter().enumerate() {
                acc += rat(self.datum.cartan[i][j] * b);
            }
            *o = acc;
        }
        FiniteWeight(out)
    }

    /// Simple-root coordinates of a finite weight (rational in general).
    pub fn weight_to_root_coords(&self, xi: &FiniteWeight) -> Vec<Rat> {
        let rank = self.rank();
        let mut out = vec![Rat::zero(); rank];
        for (j, o) in out.iter_mut().enumerate() {
            let mut acc = Rat::zero();
            for (i, c) in xi.0.iter().enumerate() {
                acc += &self.cartan_inv[j][i] * c;
            }
            *o = acc;
        }
        out
    }

    /// The coroot of `alpha` expressed in simple-coroot coordinates.
    ///
    /// These are the integer coefficients of the degree-one form used as an
    /// edge label and congruence modulus downstream.
    pub fn coroot_form(&self, alpha: &Root) -> Result<LinearForm, Error> {
        if !self.is_root(alpha) {
            return Err(Error::NotARoot(alpha.to_string()));
        }
        let norm = self.norm_sq(alpha);
        let coeffs: Vec<Rat> = alpha
            .0
            .iter()
            .enumerate()
            .map(|(i, &b)| rat(2) * rat(b) * &self.datum.symmetrizer[i] / &norm)
            .collect();
        debug_assert!(coeffs.iter().all(|c| c.is_integer()));
        Ok(LinearForm::new(coeffs))
    }

    /// Pairing of a finite weight with the coroot of `alpha`.
    pub fn pairing(&self, xi: &FiniteWeight, alpha: &Root) -> Result<Rat, Error> {
        let form = self.coroot_form(alpha)?;
        if xi.rank() != self.rank() {
            return Err(Error::Dimension(format!(
                "weight has {} coordinates, datum has rank {}",
                xi.rank(),
                self.rank()
            )));
        }
        let mut acc = Rat::zero();
        for (c, x) in form.coeffs().iter().zip(&xi.0) {
            acc += c * x;
        }
        Ok(acc)
    }

    /// Classical count of positive roots for this type.
    pub fn expected_positive_root_count(&self) -> usize {
        let n = self.rank();
        match self.family() {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

fn rat_to_i64_max1(r: &Rat) -> i64 {
    // length ratios are 1/3, 1/2, 1, 2 or 3; bond multiplicity is max(1, ratio)
    if r <= &Rat::one() {
        1
    } else {
        debug_assert!(r.is_integer());
        r.to_integer().try_into().unwrap_or(1)
    }
}

fn norm_sq_in(gram: &[Vec<Rat>], alpha: &Root) -> Rat {
    let mut acc = Rat::zero();
    for (i, &a) in alpha.0.iter().enumerate() {
        for (j, &b) in alpha.0.iter().enumerate() {
            acc += rat(a * b) * &gram[i][j];
        }
    }
    acc
}

/// Generate all positive roots by extending along root strings, one height at
/// a time: `beta + alpha_i` is a root iff the string `beta - p alpha_i ...
/// beta + q alpha_i` has `q = p - <beta, alpha_i-vee> >= 1`.
fn generate_positive_roots(datum: &CartanDatum) -> Vec<Root> {
    let rank = datum.rank;
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut by_height: Vec<Vec<Root>> = vec![Vec::new()];
    let simples: Vec<Root> = (0..rank).map(|i| Root::simple(rank, i)).collect();
    for s in &simples {
        known.insert(s.0.clone());
    }
    by_height.push(simples);

    let mut h = 1usize;
    while h < by_height.len() {
        let current = by_height[h].clone();
        for beta in &current {
            for i in 0..rank {
                // p = how far the alpha_i-string extends below beta
                let mut p = 0i64;
                let mut probe = beta.0.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = beta
                    .0
                    .iter()
                    .enumerate()
                    .map(|(j, &b)| datum.cartan[i][j] * b)
                    .sum();
                if p - pairing >= 1 {
                    let mut up = beta.0.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        let root = Root(up);
                        let nh = root.height() as usize;
                        while by_height.len() <= nh {
                            by_height.push(Vec::new());
                        }
                        by_height[nh].push(root);
                    }
                }
            }
        }
        h += 1;
    }

    let mut all: Vec<Root> = by_height.into_iter().flatten().collect();
    // graded-lexicographic: by height, then by coordinates
    all.sort_by(|a, b| (a.height(), &a.0).cmp(&(b.height(), &b.0)));
    all
}

/// Invert a square rational matrix by Gauss-Jordan elimination.
fn invert_matrix(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let p = aug[col][col].clone();
        for x in aug[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in 0..2 * n {
                    let delta = &f * &aug[col][c];
                    aug[r][c] = &aug[r][c] - &delta;
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_basics() {
        let d = RootDatum::new(Family::A, 1).unwrap();
        assert_eq!(d.positive_roots().len(), 1);
        assert_eq!(d.dual_coxeter(), 2);
        assert_eq!(d.highest_root().coords(), &[1]);
    }

    #[test]
    fn a2_basics() {
        let d = RootDatum::new(Family::A, 2).unwrap();
        assert_eq!(d.positive_roots().len(), 3);
        assert_eq!(d.dual_coxeter(), 3);
        assert_eq!(d.highest_root().coords(), &[1, 1]);
    }

    #[test]
    fn g2_normalization() {
        let d = RootDatum::new(Family::G, 2).unwrap();
        assert_eq!(d.positive_roots().len(), 6);
        assert_eq!(d.norm_sq(d.highest_root()), rat(2));
        // the short simple root has squared length 2/3
        assert_eq!(d.norm_sq(&d.simple_root(0)), frac(2, 3));
        assert_eq!(d.dual_coxeter(), 4);
    }

    #[test]
    fn pairing_reproduces_cartan_matrix() {
        for (fam, rank) in [
            (Family::A, 2),
            (Family::B, 2),
            (Family::C, 3),
            (Family::G, 2),
            (Family::F, 4),
        ] {
            let d = RootDatum::new(fam, rank).unwrap();
            for i in 0..rank {
                for j in 0..rank {
                    let w = d.root_weight(&d.simple_root(j));
                    let p = d.pairing(&w, &d.simple_root(i)).unwrap();
                    assert_eq!(p, rat(d.cartan().cartan[i][j]), "{fam}{rank} at ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn rho_pairs_to_one_with_every_simple_coroot() {
        for (fam, rank) in [(Family::A, 3), (Family::B, 3), (Family::D, 4), (Family::G, 2)] {
            let d = RootDatum::new(fam, rank).unwrap();
            for i in 0..rank {
                assert_eq!(d.pairing(d.rho(), &d.simple_root(i)).unwrap(), rat(1));
            }
        }
    }

    #[test]
    fn coroot_forms() {
        let a1 = RootDatum::new(Family::A, 1).unwrap();
        let f = a1.coroot_form(&a1.simple_root(0)).unwrap();
        assert_eq!(f.coeffs(), &[rat(1)]);

        let a2 = RootDatum::new(Family::A, 2).unwrap();
        let theta = a2.highest_root().clone();
        let f = a2.coroot_form(&theta).unwrap();
        assert_eq!(f.coeffs(), &[rat(1), rat(1)]);

        let neg = a2.simple_root(0).negated();
        let f = a2.coroot_form(&neg).unwrap();
        assert_eq!(f.coeffs(), &[rat(-1), rat(0)]);
    }

    #[test]
    fn coroot_form_negation_is_linear() {
        let d = RootDatum::new(Family::B, 2).unwrap();
        for alpha in d.positive_roots() {
            let f = d.coroot_form(alpha).unwrap();
            let g = d.coroot_form(&alpha.negated()).unwrap();
            for (a, b) in f.coeffs().iter().zip(g.coeffs()) {
                assert_eq!(&(-a), b);
            }
        }
    }

    #[test]
    fn invalid_types_are_rejected() {
        assert!(RootDatum::new(Family::B, 1).is_err());
        assert!(RootDatum::new(Family::D, 3).is_err());
        assert!(RootDatum::new(Family::E, 5).is_err());
        assert!(RootDatum::new(Family::E, 9).is_err());
        assert!(RootDatum::new(Family::F, 3).is_err());
        assert!(RootDatum::new(Family::G, 3).is_err());
        assert!(RootDatum::from_type_string("H3").is_err());
        assert!(RootDatum::from_type_string("A0").is_err());
    }

    #[test]
    fn gram_is_symmetric_positive_definite() {
        for s in ["A3", "B3", "C3", "D4", "F4", "G2"] {
            let d = RootDatum::from_type_string(s).unwrap();
            let g = d.form_gram();
            let n = d.rank();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(g[i][j], g[j][i], "{s} gram not symmetric");
                }
            }
            // positive definiteness via leading principal minors
            for k in 1..=n {
                let minor: Vec<Vec<Rat>> =
                    (0..k).map(|i| (0..k).map(|j| g[i][j].clone()).collect()).collect();
                assert!(determinant(&minor) > Rat::zero(), "{s} minor {k} not positive");
            }
        }
    }

    fn determinant(m: &[Vec<Rat>]) -> Rat {
        let n = m.len();
        let mut a: Vec<Vec<Rat>> = m.to_vec();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Rat::zero();
            };
            if p != col {
                a.swap(col, p);
                det = -det;
            }
            det *= a[col][col].clone();
            let pivot = a[col][col].clone();
            for r in col + 1..n {
                let f = &a[r][col] / &pivot;
                for c in col..n {
                    let delta = &f * &a[col][c];
                    a[r][c] = &a[r][c] - &delta;
                }
            }
        }
        det
    }

    #[test]
    fn root_coordinate_conversions_roundtrip() {
        let d = RootDatum::from_type_string("C3").unwrap();
        for alpha in d.positive_roots() {
            let w = d.root_weight(alpha);
            let back = d.weight_to_root_coords(&w);
            for (b, &a) in back.iter().zip(alpha.coords()) {
                assert_eq!(b, &rat(a));
            }
        }
    }
}
