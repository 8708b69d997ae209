//! Group codes: ideals of KG viewed as linear codes of length |G|.
//!
//! A code is a canonical subspace of K^|G| plus lazily cached sidedness
//! verdicts. Minimum distances and weight distributions are exact, computed
//! by enumerating all q^dim codewords under a hard budget; over GF(2) the
//! enumeration walks a Gray code on machine-word-packed rows and may be
//! partitioned across worker threads (the histogram merge is order
//! independent, so results do not depend on the worker count).

use std::sync::OnceLock;

use crate::algebra::AlgebraElement;
use crate::error::Error;
use crate::field::Field;
use crate::group::Group;
use crate::linalg::Subspace;

/// Default cap on the number of codewords enumerated for distances and
/// weight distributions.
pub const DEFAULT_CODEWORD_BUDGET: u64 = 1 << 24;

/// The outcome of a distance computation that may legitimately refuse.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceOutcome {
    Exact(u64),
    /// q^dim exceeded the enumeration budget; never an estimate.
    BudgetExceeded,
    /// The zero code has no nonzero codeword, so no distance.
    ZeroCode,
}

impl DistanceOutcome {
    pub fn exact(&self) -> Option<u64> {
        match self {
            DistanceOutcome::Exact(d) => Some(*d),
            _ => None,
        }
    }

    /// Distance agreement where budget refusals count as unknown-but-ok.
    pub fn agrees_with(&self, other: &DistanceOutcome) -> bool {
        use DistanceOutcome::*;
        match (self, other) {
            (Exact(a), Exact(b)) => a == b,
            (ZeroCode, ZeroCode) => true,
            (BudgetExceeded, _) | (_, BudgetExceeded) => true,
            _ => false,
        }
    }
}

/// Full weight distribution of a code: counts[w] = number of codewords of
/// Hamming weight w.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    counts: Vec<u64>,
}

impl WeightEnumerator {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Smallest positive weight with a codeword, i.e. the minimum distance.
    pub fn min_positive_weight(&self) -> Option<u64> {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(w, _)| w as u64)
    }
}

/// A group code: a subspace of K^|G| tied to its group and field.
#[derive(Debug)]
pub struct GroupCode {
    field: Field,
    group: Group,
    space: Subspace,
    right_cache: OnceLock<bool>,
    left_cache: OnceLock<bool>,
}

impl Clone for GroupCode {
    fn clone(&self) -> Self {
        let c = GroupCode {
            field: self.field.clone(),
            group: self.group.clone(),
            space: self.space.clone(),
            right_cache: OnceLock::new(),
            left_cache: OnceLock::new(),
        };
        if let Some(&v) = self.right_cache.get() {
            let _ = c.right_cache.set(v);
        }
        if let Some(&v) = self.left_cache.get() {
            let _ = c.left_cache.set(v);
        }
        c
    }
}

impl PartialEq for GroupCode {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.group == other.group && self.space == other.space
    }
}

impl Eq for GroupCode {}

impl GroupCode {
    pub fn zero(field: &Field, group: &Group) -> GroupCode {
        GroupCode::wrap(field, group, Subspace::zero(field, group.order()))
    }

    pub fn full(field: &Field, group: &Group) -> GroupCode {
        GroupCode::wrap(field, group, Subspace::full(field, group.order()))
    }

    /// Wraps an arbitrary subspace of K^|G| as a code (no ideal structure
    /// implied).
    pub fn from_subspace(field: &Field, group: &Group, space: Subspace) -> Result<GroupCode, Error> {
        if space.ambient_dim() != group.order() || space.field() != field {
            return Err(Error::AmbientMismatch);
        }
        Ok(GroupCode::wrap(field, group, space))
    }

    fn wrap(field: &Field, group: &Group, space: Subspace) -> GroupCode {
        GroupCode {
            field: field.clone(),
            group: group.clone(),
            space,
            right_cache: OnceLock::new(),
            left_cache: OnceLock::new(),
        }
    }

    /// The right ideal generated by the given elements: the span of
    /// {gen * g : g in G}.
    pub fn right_ideal(gens: &[AlgebraElement]) -> Result<GroupCode, Error> {
        GroupCode::ideal_from(gens, Side::Right)
    }

    /// The left ideal generated by the given elements: the span of
    /// {g * gen : g in G}.
    pub fn left_ideal(gens: &[AlgebraElement]) -> Result<GroupCode, Error> {
        GroupCode::ideal_from(gens, Side::Left)
    }

    /// The two-sided ideal generated by the given elements: the span of
    /// {g * gen * h : g, h in G}.
    pub fn two_sided_ideal(gens: &[AlgebraElement]) -> Result<GroupCode, Error> {
        GroupCode::ideal_from(gens, Side::TwoSided)
    }

    fn ideal_from(gens: &[AlgebraElement], side: Side) -> Result<GroupCode, Error> {
        let first = gens.first().ok_or(Error::AmbientMismatch)?;
        let (field, group) = (first.field().clone(), first.group().clone());
        for g in gens {
            if g.field() != &field || g.group() != &group {
                return Err(Error::AmbientMismatch);
            }
        }
        let n = group.order();
        let mut rows = Vec::new();
        for gen in gens {
            for j in 0..n {
                match side {
                    Side::Left => rows.push(gen.left_translate(j).raw_coeffs().to_vec()),
                    _ => rows.push(gen.right_translate(j).raw_coeffs().to_vec()),
                }
            }
        }
        let mut space = Subspace::from_raw_rows(&field, n, rows);
        if side == Side::TwoSided {
            // Close the right ideal under left translation.
            loop {
                let mut extra = Vec::new();
                for i in 0..space.dim() {
                    let row = AlgebraElement::from_raw(&field, &group, space.basis().row(i).to_vec());
                    for j in 0..n {
                        let t = row.left_translate(j);
                        if !space.contains_raw(t.raw_coeffs()) {
                            extra.push(t.raw_coeffs().to_vec());
                        }
                    }
                }
                if extra.is_empty() {
                    break;
                }
                let mut rows: Vec<Vec<u64>> =
                    (0..space.dim()).map(|i| space.basis().row(i).to_vec()).collect();
                rows.extend(extra);
                space = Subspace::from_raw_rows(&field, n, rows);
            }
        }
        Ok(GroupCode::wrap(&field, &group, space))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn length(&self) -> usize {
        self.group.order()
    }

    pub fn contains(&self, a: &AlgebraElement) -> Result<bool, Error> {
        if a.field() != &self.field || a.group() != &self.group {
            return Err(Error::AmbientMismatch);
        }
        Ok(self.space.contains_raw(a.raw_coeffs()))
    }

    /// The codeword of index i of the canonical basis, as an algebra element.
    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        AlgebraElement::from_raw(&self.field, &self.group, self.space.basis().row(i).to_vec())
    }

    /// Whether the space is closed under right multiplication by every group
    /// element. Cached after the first computation.
    pub fn is_right_ideal(&self) -> bool {
        *self.right_cache.get_or_init(|| self.closed_under(Side::Right))
    }

    /// Whether the space is closed under left multiplication by every group
    /// element. Cached after the first computation.
    pub fn is_left_ideal(&self) -> bool {
        *self.left_cache.get_or_init(|| self.closed_under(Side::Left))
    }

    pub fn is_two_sided(&self) -> bool {
        self.is_right_ideal() && self.is_left_ideal()
    }

    fn closed_under(&self, side: Side) -> bool {
        let n = self.group.order();
        (0..self.space.dim()).all(|i| {
            let row = self.basis_element(i);
            (0..n).all(|j| {
                let t = match side {
                    Side::Left => row.left_translate(j),
                    _ => row.right_translate(j),
                };
                self.space.contains_raw(t.raw_coeffs())
            })
        })
    }

    /// The Euclidean dual: the annihilator under sum over g of a_g * b_g,
    /// computed as the kernel of the generator matrix.
    pub fn dual(&self) -> GroupCode {
        GroupCode::wrap(&self.field, &self.group, self.space.dual())
    }

    /// The Hermitian dual over GF(q^2): the annihilator under
    /// sum over g of a_g * b_g^q.
    pub fn hermitian_dual(&self, q: u64) -> Result<GroupCode, Error> {
        let order = self.field.order();
        if q.checked_mul(q) != Some(order) {
            return Err(Error::HermitianOrder { q, order });
        }
        // v is in the dual iff the coordinatewise q-power of v lies in the
        // kernel; the q-power map is a bijection, so apply it to the kernel.
        let kernel = self.space.dual();
        let field = self.field.clone();
        let mapped = kernel.map_coords(|v| field.pow_raw(v, q));
        Ok(GroupCode::wrap(&self.field, &self.group, mapped))
    }

    /// Image under the coordinate permutation g -> g^-1 (the hat map); the
    /// canonical permutation-equivalence witness. An involution.
    pub fn hat_image(&self) -> GroupCode {
        let perm: Vec<usize> = (0..self.group.order())
            .map(|i| self.group.inverse(i))
            .collect();
        GroupCode::wrap(&self.field, &self.group, self.space.permute_coords(&perm))
    }

    /// Image under the coordinatewise q-power map.
    pub fn frobenius_image(&self, q_pow: u64) -> Result<GroupCode, Error> {
        self.field.check_char_power(q_pow)?;
        let field = self.field.clone();
        let mapped = self.space.map_coords(|v| field.pow_raw(v, q_pow));
        Ok(GroupCode::wrap(&self.field, &self.group, mapped))
    }

    /// Exact minimum weight over all nonzero codewords, by exhaustive
    /// enumeration of all q^dim of them. Refuses above the budget.
    pub fn min_distance(&self, budget: u64, workers: usize) -> Result<u64, Error> {
        if self.dim() == 0 {
            return Err(Error::ZeroCode);
        }
        let en = self.weight_enumerator(budget, workers)?;
        Ok(en.min_positive_weight().expect("dim >= 1 has a nonzero word"))
    }

    /// Full weight distribution by the same enumeration.
    pub fn weight_enumerator(&self, budget: u64, workers: usize) -> Result<WeightEnumerator, Error> {
        let q = self.field.order();
        let dim = self.dim() as u32;
        let needed = (q as u128)
            .checked_pow(dim)
            .ok_or(Error::BudgetExceeded {
                needed: u128::MAX,
                budget,
            })?;
        if needed > budget as u128 {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let n = self.length();
        if dim == 0 {
            let mut counts = vec![0u64; n + 1];
            counts[0] = 1;
            return Ok(WeightEnumerator { counts });
        }
        let counts = if q == 2 {
            packed_weights_gf2(&self.space, needed as u64, workers.max(1))
        } else {
            generic_weights(&self.field, &self.space)
        };
        Ok(WeightEnumerator { counts })
    }

    /// Distance plus the number of codewords enumerated, with refusals folded
    /// into the outcome instead of errors.
    pub fn distance_outcome(&self, budget: u64, workers: usize) -> (DistanceOutcome, u64) {
        let q = self.field.order();
        match self.min_distance(budget, workers) {
            Ok(d) => {
                let words = (q as u128).pow(self.dim() as u32) as u64;
                (DistanceOutcome::Exact(d), words)
            }
            Err(Error::ZeroCode) => (DistanceOutcome::ZeroCode, 0),
            Err(_) => (DistanceOutcome::BudgetExceeded, 0),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Right,
    Left,
    TwoSided,
}

/// Gray-code enumeration over machine-word-packed basis rows. Visits the
/// codeword for every index in 1..total; `total` must be 2^dim.
fn packed_weights_gf2(space: &Subspace, total: u64, workers: usize) -> Vec<u64> {
    let n = space.ambient_dim();
    let dim = space.dim();
    let words = n.div_ceil(64);
    let rows: Vec<Vec<u64>> = (0..dim)
        .map(|i| {
            let mut packed = vec![0u64; words];
            for (j, &v) in space.basis().row(i).iter().enumerate() {
                if v != 0 {
                    packed[j / 64] |= 1 << (j % 64);
                }
            }
            packed
        })
        .collect();

    let workers = workers.min((total - 1).max(1) as usize).max(1);
    let scan = |start: u64, end: u64| -> Vec<u64> {
        let mut hist = vec![0u64; n + 1];
        if start >= end {
            return hist;
        }
        let mut acc = vec![0u64; words];
        let g = start ^ (start >> 1);
        for (bit, row) in rows.iter().enumerate() {
            if g >> bit & 1 == 1 {
                for (a, r) in acc.iter_mut().zip(row) {
                    *a ^= r;
                }
            }
        }
        let mut i = start;
        loop {
            let weight: u32 = acc.iter().map(|w| w.count_ones()).sum();
            hist[weight as usize] += 1;
            i += 1;
            if i == end {
                break;
            }
            // gray(i-1) ^ gray(i) flips exactly the bit at trailing_zeros(i)
            let row = &rows[i.trailing_zeros() as usize];
            for (a, r) in acc.iter_mut().zip(row) {
                *a ^= r;
            }
        }
        hist
    };

    let mut counts = vec![0u64; n + 1];
    counts[0] = 1; // the zero codeword
    if workers == 1 {
        for (slot, c) in counts.iter_mut().zip(scan(1, total)) {
            *slot += c;
        }
    } else {
        let span = total - 1;
        let chunks: Vec<(u64, u64)> = (0..workers as u64)
            .map(|w| {
                let lo = 1 + span * w / workers as u64;
                let hi = 1 + span * (w + 1) / workers as u64;
                (lo, hi)
            })
            .collect();
        let hists: Vec<Vec<u64>> = std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .iter()
                .map(|&(lo, hi)| scope.spawn(move || scan(lo, hi)))
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker")).collect()
        });
        for hist in hists {
            for (slot, c) in counts.iter_mut().zip(hist) {
                *slot += c;
            }
        }
    }
    counts
}

/// Field-generic enumeration: a depth-first walk over coefficient vectors
/// that updates the running combination by one scaled row per step.
fn generic_weights(field: &Field, space: &Subspace) -> Vec<u64> {
    let n = space.ambient_dim();
    let dim = space.dim();
    let q = field.order();
    let mut counts = vec![0u64; n + 1];
    let mut acc = vec![0u64; n];

    struct Walker<'a> {
        field: &'a Field,
        space: &'a Subspace,
        q: u64,
        dim: usize,
        counts: &'a mut Vec<u64>,
        acc: &'a mut Vec<u64>,
    }

    impl Walker<'_> {
        fn add_row(&mut self, level: usize, scalar: u64) {
            if scalar == 0 {
                return;
            }
            let row = self.space.basis().row(level);
            for (slot, &rv) in self.acc.iter_mut().zip(row) {
                if rv != 0 {
                    *slot = self.field.add_raw(*slot, self.field.mul_raw(scalar, rv));
                }
            }
        }

        fn walk(&mut self, level: usize) {
            if level == self.dim {
                let w = self.acc.iter().filter(|&&v| v != 0).count();
                self.counts[w] += 1;
                return;
            }
            self.walk(level + 1);
            let mut prev = 0u64;
            for v in 1..self.q {
                let delta = self.field.sub_raw(v, prev);
                self.add_row(level, delta);
                self.walk(level + 1);
                prev = v;
            }
            self.add_row(level, self.field.neg_raw(prev));
        }
    }

    Walker {
        field,
        space,
        q,
        dim,
        counts: &mut counts,
        acc: &mut acc,
    }
    .walk(0);
    counts
}
