//! Finite groups as explicit Cayley tables, with constructors for cyclic
//! groups, direct products of cyclics, and dihedral groups.
//!
//! The identity always sits at index 0 and element order is fixed per
//! constructor, so coordinate positions (and everything derived from them,
//! such as code bases and reports) are reproducible bit for bit.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;

/// Largest supported group order.
pub const MAX_GROUP_ORDER: usize = 1 << 12;

/// Orders up to this get an exhaustive associativity check at construction;
/// larger tables are validated on `ASSOC_SAMPLES` seeded random triples.
const ASSOC_EXHAUSTIVE_LIMIT: usize = 256;
const ASSOC_SAMPLES: usize = 100_000;

#[derive(Debug)]
struct GroupInner {
    order: usize,
    /// Row-major n*n table of element indices.
    cayley: Vec<u32>,
    inv: Vec<u32>,
    labels: Vec<String>,
    generators: Vec<(String, usize)>,
    abelian: bool,
}

/// A finite group given by its Cayley table. Immutable and cheap to clone.
#[derive(Clone, Debug)]
pub struct Group(Arc<GroupInner>);

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.order == other.0.order && self.0.cayley == other.0.cayley)
    }
}

impl Eq for Group {}

impl Group {
    /// The cyclic group C_m with generator `a`; index i is a^i.
    pub fn cyclic(m: usize) -> Result<Group, Error> {
        check_order(m)?;
        let cayley = (0..m)
            .flat_map(|i| (0..m).map(move |j| ((i + j) % m) as u32))
            .collect();
        let labels = (0..m).map(|i| power_label("a", i)).collect();
        let generators = if m >= 2 {
            vec![("a".to_string(), 1)]
        } else {
            vec![]
        };
        Group::build(m, cayley, labels, generators)
    }

    /// Direct product in list order. Indices are mixed-radix with the first
    /// factor most significant, so index order is lexicographic in the
    /// exponent tuples. Generators are relabeled `x1`, `x2`, ...
    pub fn direct_product(factors: &[Group]) -> Result<Group, Error> {
        if factors.is_empty() {
            return Err(Error::Group("empty direct product".to_string()));
        }
        let mut order = 1usize;
        for g in factors {
            order = order
                .checked_mul(g.order())
                .filter(|&n| n <= MAX_GROUP_ORDER)
                .ok_or(Error::Group(format!(
                    "group order exceeds the supported maximum {MAX_GROUP_ORDER}"
                )))?;
        }
        let n = factors.len();
        let mut strides = vec![1usize; n];
        for k in (0..n.saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * factors[k + 1].order();
        }
        let decode = |idx: usize| -> Vec<usize> {
            (0..n)
                .map(|k| idx / strides[k] % factors[k].order())
                .collect()
        };
        let mut cayley = Vec::with_capacity(order * order);
        for i in 0..order {
            let ei = decode(i);
            for j in 0..order {
                let ej = decode(j);
                let mut idx = 0;
                for k in 0..n {
                    idx += factors[k].mul(ei[k], ej[k]) * strides[k];
                }
                cayley.push(idx as u32);
            }
        }
        let labels = (0..order)
            .map(|idx| {
                let exps = decode(idx);
                let parts: Vec<String> = exps
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(k, &e)| power_label_exp(&format!("x{}", k + 1), e))
                    .collect();
                if parts.is_empty() {
                    "1".to_string()
                } else {
                    parts.join("*")
                }
            })
            .collect();
        let generators = (0..n)
            .map(|k| (format!("x{}", k + 1), strides[k] % order))
            .collect();
        Group::build(order, cayley, labels, generators)
    }

    /// The dihedral group of order 2m with presentation a^m = 1 = b^2,
    /// b*a = a^-1*b. Element a^i*b^j has index i + m*j (rotations first).
    pub fn dihedral(m: usize) -> Result<Group, Error> {
        check_order(m)?;
        if 2 * m > MAX_GROUP_ORDER {
            return Err(Error::Group(format!(
                "group order exceeds the supported maximum {MAX_GROUP_ORDER}"
            )));
        }
        let order = 2 * m;
        let mut cayley = Vec::with_capacity(order * order);
        for idx1 in 0..order {
            let (i1, j1) = (idx1 % m, idx1 / m);
            for idx2 in 0..order {
                let (i2, j2) = (idx2 % m, idx2 / m);
                // a^i1 b^j1 a^i2 b^j2 = a^(i1 +/- i2) b^(j1+j2)
                let i = if j1 == 1 { (i1 + m - i2) % m } else { (i1 + i2) % m };
                let j = (j1 + j2) % 2;
                cayley.push((i + m * j) as u32);
            }
        }
        let mut labels: Vec<String> = (0..m).map(|i| power_label("a", i)).collect();
        for i in 0..m {
            labels.push(if i == 0 {
                "b".to_string()
            } else {
                format!("{}*b", power_label("a", i))
            });
        }
        let mut generators = Vec::new();
        if m >= 2 {
            generators.push(("a".to_string(), 1));
        }
        generators.push(("b".to_string(), m));
        Group::build(order, cayley, labels, generators)
    }

    /// Builds a group from an explicit n-by-n index table, validating every
    /// group axiom. Elements are labeled g0..g(n-1) and every non-identity
    /// label is usable as a symbol in element expressions.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Group, Error> {
        let n = table.len();
        check_order(n)?;
        let mut cayley = Vec::with_capacity(n * n);
        for row in &table {
            if row.len() != n {
                return Err(Error::Group("cayley table is not square".to_string()));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::Group(format!(
                        "table entry {v} out of range 0..{n}"
                    )));
                }
                cayley.push(v as u32);
            }
        }
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        let generators = (1..n).map(|i| (format!("g{i}"), i)).collect();
        Group::build(n, cayley, labels, generators)
    }

    fn build(
        order: usize,
        cayley: Vec<u32>,
        labels: Vec<String>,
        generators: Vec<(String, usize)>,
    ) -> Result<Group, Error> {
        debug_assert_eq!(cayley.len(), order * order);
        let at = |i: usize, j: usize| cayley[i * order + j] as usize;

        for i in 0..order {
            if at(0, i) != i || at(i, 0) != i {
                return Err(Error::Group(format!(
                    "identity is not at index 0 (fails at element {i})"
                )));
            }
        }
        let mut seen = vec![false; order];
        for i in 0..order {
            seen.fill(false);
            for j in 0..order {
                seen[at(i, j)] = true;
            }
            if seen.iter().any(|s| !s) {
                return Err(Error::Group(format!("row {i} is not a permutation")));
            }
            seen.fill(false);
            for j in 0..order {
                seen[at(j, i)] = true;
            }
            if seen.iter().any(|s| !s) {
                return Err(Error::Group(format!("column {i} is not a permutation")));
            }
        }
        let mut inv = Vec::with_capacity(order);
        for i in 0..order {
            let j = (0..order)
                .find(|&j| at(i, j) == 0 && at(j, i) == 0)
                .ok_or_else(|| Error::Group(format!("element {i} has no inverse")))?;
            inv.push(j as u32);
        }
        if order <= ASSOC_EXHAUSTIVE_LIMIT {
            for i in 0..order {
                for j in 0..order {
                    for k in 0..order {
                        if at(at(i, j), k) != at(i, at(j, k)) {
                            return Err(Error::Group(format!(
                                "associativity fails at ({i},{j},{k})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for _ in 0..ASSOC_SAMPLES {
                let i = rng.random_range(0..order);
                let j = rng.random_range(0..order);
                let k = rng.random_range(0..order);
                if at(at(i, j), k) != at(i, at(j, k)) {
                    return Err(Error::Group(format!(
                        "associativity fails at ({i},{j},{k})"
                    )));
                }
            }
        }
        let abelian = (0..order).all(|i| (i..order).all(|j| at(i, j) == at(j, i)));
        Ok(Group(Arc::new(GroupInner {
            order,
            cayley,
            inv,
            labels,
            generators,
            abelian,
        })))
    }

    /// Parses a group spec: `cyclic:m`, `abelian:m1,m2,...`, `dihedral:m`
    /// (order 2m), or `table:<path>` to a whitespace-separated n*n table.
    pub fn parse_spec(spec: &str) -> Result<Group, Error> {
        let (kind, rest) = spec.split_once(':').ok_or_else(|| Error::Parse {
            pos: 0,
            msg: format!("group spec must look like kind:args, got '{spec}'"),
        })?;
        let arg_pos = kind.len() + 1;
        match kind {
            "cyclic" => Group::cyclic(parse_usize(rest, arg_pos)?),
            "dihedral" => Group::dihedral(parse_usize(rest, arg_pos)?),
            "abelian" => {
                let factors = rest
                    .split(',')
                    .map(|part| Group::cyclic(parse_usize(part.trim(), arg_pos)?))
                    .collect::<Result<Vec<_>, Error>>()?;
                Group::direct_product(&factors)
            }
            "table" => {
                let text = std::fs::read_to_string(rest)?;
                Group::from_table(parse_table(&text)?)
            }
            other => Err(Error::Parse {
                pos: 0,
                msg: format!(
                    "unknown group kind '{other}' (expected cyclic, abelian, dihedral, or table)"
                ),
            }),
        }
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.0.cayley[i * self.0.order + j] as usize
    }

    #[inline]
    pub fn inverse(&self, i: usize) -> usize {
        self.0.inv[i] as usize
    }

    pub fn is_abelian(&self) -> bool {
        self.0.abelian
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    pub fn generators(&self) -> &[(String, usize)] {
        &self.0.generators
    }

    pub fn generator_index(&self, symbol: &str) -> Option<usize> {
        self.0
            .generators
            .iter()
            .find(|(s, _)| s == symbol)
            .map(|&(_, i)| i)
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "group of order {}", self.0.order)
    }
}

fn check_order(m: usize) -> Result<(), Error> {
    if m < 1 {
        return Err(Error::Group("group order must be at least 1".to_string()));
    }
    if m > MAX_GROUP_ORDER {
        return Err(Error::Group(format!(
            "group order exceeds the supported maximum {MAX_GROUP_ORDER}"
        )));
    }
    Ok(())
}

fn power_label(symbol: &str, exp: usize) -> String {
    match exp {
        0 => "1".to_string(),
        _ => power_label_exp(symbol, exp),
    }
}

fn power_label_exp(symbol: &str, exp: usize) -> String {
    match exp {
        1 => symbol.to_string(),
        _ => format!("{symbol}^{exp}"),
    }
}

fn parse_usize(text: &str, pos: usize) -> Result<usize, Error> {
    text.parse::<usize>().map_err(|_| Error::Parse {
        pos,
        msg: format!("expected an integer, got '{text}'"),
    })
}

fn parse_table(text: &str) -> Result<Vec<Vec<usize>>, Error> {
    let entries = text
        .split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("table entry '{tok}' is not an integer"),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let n = (entries.len() as f64).sqrt().round() as usize;
    if n == 0 || n * n != entries.len() {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("table has {} entries, not a perfect square", entries.len()),
        });
    }
    Ok(entries.chunks(n).map(|row| row.to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle for the four Cayley-table axioms, independent of `build`.
    fn assert_valid(g: &Group) {
        let n = g.order();
        for i in 0..n {
            assert_eq!(g.mul(0, i), i);
            assert_eq!(g.mul(i, 0), i);
            assert_eq!(g.mul(i, g.inverse(i)), 0);
            assert_eq!(g.mul(g.inverse(i), i), 0);
            let row: std::collections::BTreeSet<usize> = (0..n).map(|j| g.mul(i, j)).collect();
            assert_eq!(row.len(), n);
            let col: std::collections::BTreeSet<usize> = (0..n).map(|j| g.mul(j, i)).collect();
            assert_eq!(col.len(), n);
        }
        if n <= 64 {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        assert_eq!(g.mul(g.mul(i, j), k), g.mul(i, g.mul(j, k)));
                    }
                }
            }
        }
    }

    #[test]
    fn cyclic_groups() {
        let c1 = Group::cyclic(1).unwrap();
        assert_eq!(c1.order(), 1);
        assert_valid(&c1);

        let c7 = Group::cyclic(7).unwrap();
        assert_eq!(c7.mul(3, 5), 1); // a^8 = a
        assert!(c7.is_abelian());
        assert_valid(&c7);

        let c2 = Group::cyclic(2).unwrap();
        assert_eq!(c2.inverse(1), 1);

        assert!(Group::cyclic(0).is_err());
    }

    #[test]
    fn direct_products() {
        let c2 = Group::cyclic(2).unwrap();
        let klein = Group::direct_product(&[c2.clone(), c2.clone()]).unwrap();
        assert_eq!(klein.order(), 4);
        for i in 0..4 {
            assert_eq!(klein.inverse(i), i);
        }
        assert_valid(&klein);

        let c3 = Group::cyclic(3).unwrap();
        let c3c3 = Group::direct_product(&[c3.clone(), c3.clone()]).unwrap();
        assert_eq!(c3c3.order(), 9);
        assert!(c3c3.is_abelian());
        assert_valid(&c3c3);

        let c7 = Group::cyclic(7).unwrap();
        let p = Group::direct_product(&[c7]).unwrap();
        assert_eq!(p.inverse(2), 5);
        assert_eq!(p.generator_index("x1"), Some(1));
        assert_valid(&p);

        assert!(Group::direct_product(&[]).is_err());
    }

    #[test]
    fn dihedral_group() {
        let d = Group::dihedral(7).unwrap();
        assert_eq!(d.order(), 14);
        assert!(!d.is_abelian());
        assert_valid(&d);

        let a = d.generator_index("a").unwrap();
        let b = d.generator_index("b").unwrap();
        let a2b = d.mul(d.mul(a, a), b);
        assert_eq!(d.label(a2b), "a^2*b");
        // reflections are involutions
        assert_eq!(d.mul(a2b, a2b), 0);
        for i in 0..7 {
            let r = i + 7;
            assert_eq!(d.mul(r, r), 0);
        }
        // rotation inverse
        assert_eq!(d.inverse(3), 4);
    }

    #[test]
    fn dihedral_one() {
        let d = Group::dihedral(1).unwrap();
        assert_eq!(d.order(), 2);
        assert_eq!(d.label(1), "b");
        assert_valid(&d);
    }

    #[test]
    fn dihedral_involution_counts() {
        for m in 1..=12 {
            let d = Group::dihedral(m).unwrap();
            // rotations that square to the identity
            let rot = (0..m).filter(|&i| d.mul(i, i) == 0).count();
            assert_eq!(rot == m, m <= 2, "m = {m}");
            // every reflection is an involution
            assert!((m..2 * m).all(|i| d.mul(i, i) == 0));
        }
    }

    #[test]
    fn from_table_validation() {
        let trivial = Group::from_table(vec![vec![0]]).unwrap();
        assert_eq!(trivial.order(), 1);

        let c2 = Group::from_table(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_valid(&c2);

        let err = Group::from_table(vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, Error::Group(_)));
        assert!(err.to_string().contains("permutation"));

        let err = Group::from_table(vec![vec![1, 0], vec![0, 1]]).unwrap_err();
        assert!(err.to_string().contains("identity"));
    }

    #[test]
    fn constructor_invariants_up_to_64() {
        for m in 1..=16 {
            assert_valid(&Group::cyclic(m).unwrap());
        }
        for m in 1..=32 {
            assert_valid(&Group::dihedral(m).unwrap());
        }
        let c4 = Group::cyclic(4).unwrap();
        let c3 = Group::cyclic(3).unwrap();
        let g = Group::direct_product(&[c4.clone(), c3.clone(), c4.clone()]).unwrap();
        assert_eq!(g.order(), 48);
        assert_valid(&g);
    }

    #[test]
    fn parse_spec_grammar() {
        assert_eq!(Group::parse_spec("cyclic:7").unwrap().order(), 7);
        assert_eq!(Group::parse_spec("dihedral:7").unwrap().order(), 14);
        let ab = Group::parse_spec("abelian:2,3").unwrap();
        assert_eq!(ab.order(), 6);
        assert!(ab.generator_index("x2").is_some());
        assert!(matches!(
            Group::parse_spec("cyclic"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Group::parse_spec("ring:3"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Group::parse_spec("cyclic:x"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn parse_table_from_file() {
        let dir = std::env::temp_dir();
        let path = dir.join("group_codes_test_table.txt");
        std::fs::write(&path, "0 1\n1 0\n").unwrap();
        let g = Group::parse_spec(&format!("table:{}", path.display())).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.generator_index("g1"), Some(1));
        std::fs::remove_file(&path).ok();
    }
}
