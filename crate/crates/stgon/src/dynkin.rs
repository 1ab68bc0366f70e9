//! Dynkin type bookkeeping: admissible (family, rank) pairs, Coxeter numbers,
//! the fixed quiver orientations with their distinguished end vertices, and
//! the folding tables for the non-simply-laced families.

use std::fmt;

use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
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
    pub fn letter(self) -> char {
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
}

/// A Dynkin type tag such as `A5`, `D4`, `E8`, `F4`, `G2`.
///
/// Only admissible pairs construct: A(n>=1), B(n>=2), C(n>=2), D(n>=4),
/// E6..E8, F4, G2. `B2` is accepted and treated like `C2` (both fold from
/// `A3`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl std::str::FromStr for DynkinType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        DynkinType::parse(s)
    }
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(DynkinType { family, rank })
        } else {
            Err(Error::BadRank {
                family: family.letter(),
                rank,
            })
        }
    }

    /// Parses a text tag like "D5" or "g2" (case-insensitive).
    pub fn parse(tag: &str) -> Result<Self, Error> {
        let t = tag.trim();
        let bad = || Error::BadTypeTag(tag.to_string());
        let mut chars = t.chars();
        let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        DynkinType::new(fam, rank).map_err(|_| bad())
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// The Coxeter number h: A_n -> n+1, B_n/C_n -> 2n, D_n -> 2(n-1),
    /// E6/E7/E8 -> 12/18/30, F4 -> 12, G2 -> 6.
    pub fn coxeter_number(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n + 1,
            Family::B | Family::C => 2 * n,
            Family::D => 2 * (n - 1),
            Family::E => match n {
                6 => 12,
                7 => 18,
                _ => 30,
            },
            Family::F => 12,
            Family::G => 6,
        }
    }

    /// Number of sides of the model polygon. Coincides with the Coxeter
    /// number in every case.
    pub fn hgon_sides(self) -> usize {
        self.coxeter_number()
    }

    /// Branch lengths (p, q, r) of the underlying tree T_{p,q,r}, with
    /// p <= q <= r, counting the trivalent vertex in each branch.
    /// Defined for simply-laced types.
    pub fn branches(self) -> Option<(usize, usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::A => Some((1, 1, n)),
            Family::D => Some((2, 2, n - 2)),
            Family::E => Some((2, 3, n - 3)),
            _ => None,
        }
    }

    /// The simply-laced type a folded type unfolds to (`self` if already
    /// simply laced). B_n -> D_{n+1} (B2 -> A3), C_n -> A_{2n-1},
    /// F4 -> E6, G2 -> D4.
    pub fn source(self) -> DynkinType {
        let n = self.rank;
        let mk = |f, r| DynkinType::new(f, r).expect("folding source is admissible");
        match self.family {
            Family::B => {
                if n == 2 {
                    mk(Family::A, 3)
                } else {
                    mk(Family::D, n + 1)
                }
            }
            Family::C => mk(Family::A, 2 * n - 1),
            Family::F => mk(Family::E, 6),
            Family::G => mk(Family::D, 4),
            _ => self,
        }
    }

    /// True for D, B and G2: the model polygon carries punctures.
    pub fn punctured(self) -> bool {
        matches!(self.family, Family::D | Family::B | Family::G)
    }

    /// Number of punctures stored on a polygon of this type.
    pub fn puncture_count(self) -> usize {
        match self.family {
            Family::D => 2,
            Family::B | Family::G => 1,
            _ => 0,
        }
    }

    /// True if the model polygon is required to be centrally symmetric
    /// (every family except A_n and E6).
    pub fn symmetric_gon(self) -> bool {
        match self.family {
            Family::A => false,
            Family::E => self.rank != 6,
            _ => true,
        }
    }
}

/// The fixed quiver orientation used for a simply-laced type, together with
/// the distinguished end vertices.
///
/// A_n is the straight quiver n -> ... -> 2 -> 1 with far end 1.
/// D_n is the chain (n-2) -> ... -> 1 with the two fork vertices n-1, n
/// pointing at n-2; far end 1.
/// E_n puts the trivalent vertex 4 on the spine 1 - 2 - 4 - 5 - ... - n with
/// vertex 3 hanging off 4; all arrows point away from 4, and the
/// (mid, near, far) ends are (1, 3, n).
#[derive(Debug, Clone)]
pub struct Orientation {
    dtype: DynkinType,
    arrows: Vec<(usize, usize)>,
    far_end: usize,
    mid_end: Option<usize>,
    near_end: Option<usize>,
}

impl Orientation {
    /// The orientation with the default far-end choice. Non-simply-laced
    /// types delegate to their folding source.
    pub fn standard(t: DynkinType) -> Orientation {
        let t = t.source();
        let default_far = match t.family {
            Family::E => t.rank,
            _ => 1,
        };
        Orientation::with_far_end(t, default_far).expect("default far end is admissible")
    }

    /// Like [`Orientation::standard`] but with an explicit far-end choice
    /// where the type admits several (A_n: both ends; D4: any leaf;
    /// E6: vertex 6 or 1).
    pub fn with_far_end(t: DynkinType, far_end: usize) -> Result<Orientation, Error> {
        let t = t.source();
        if !Orientation::far_end_choices(t).contains(&far_end) {
            return Err(Error::Unsupported {
                dtype: t.to_string(),
                what: "not an admissible far-end vertex",
            });
        }
        let n = t.rank;
        let mut arrows = Vec::new();
        let (mid_end, near_end) = match t.family {
            Family::A => {
                for i in 1..n {
                    arrows.push((i + 1, i));
                }
                (None, None)
            }
            Family::D => {
                for i in 1..n - 2 {
                    arrows.push((i + 1, i));
                }
                arrows.push((n - 1, n - 2));
                arrows.push((n, n - 2));
                (Some(n), Some(n - 1))
            }
            Family::E => {
                arrows.push((2, 1));
                arrows.push((4, 2));
                arrows.push((4, 3));
                arrows.push((4, 5));
                for i in 5..n {
                    arrows.push((i, i + 1));
                }
                (Some(1), Some(3))
            }
            _ => unreachable!("source() is simply laced"),
        };
        Ok(Orientation {
            dtype: t,
            arrows,
            far_end,
            mid_end,
            near_end,
        })
    }

    /// Admissible far-end vertices: two choices for A_n (n >= 2) and E6,
    /// three for D4, otherwise unique.
    pub fn far_end_choices(t: DynkinType) -> Vec<usize> {
        let t = t.source();
        let n = t.rank;
        match t.family {
            Family::A if n >= 2 => vec![1, n],
            Family::A => vec![1],
            Family::D if n == 4 => vec![1, 3, 4],
            Family::D => vec![1],
            Family::E if n == 6 => vec![6, 1],
            Family::E => vec![n],
            _ => unreachable!(),
        }
    }

    pub fn dtype(&self) -> DynkinType {
        self.dtype
    }

    pub fn rank(&self) -> usize {
        self.dtype.rank()
    }

    /// Arrows (source, target), 1-based vertex labels.
    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn far_end(&self) -> usize {
        self.far_end
    }

    pub fn mid_end(&self) -> Option<usize> {
        self.mid_end
    }

    pub fn near_end(&self) -> Option<usize> {
        self.near_end
    }

    /// Undirected neighbours of a vertex in the diagram.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .arrows
            .iter()
            .filter_map(|&(s, t)| {
                if s == v {
                    Some(t)
                } else if t == v {
                    Some(s)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbours(v).len()
    }

    /// For every vertex, its unique neighbour on the diagram path toward
    /// `root` (None at the root itself). The diagram is a tree.
    pub fn parents_toward(&self, root: usize) -> Vec<Option<usize>> {
        let n = self.rank();
        let mut parent = vec![None; n + 1];
        let mut seen = vec![false; n + 1];
        let mut queue = std::collections::VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        parent.remove(0);
        parent
    }

    /// Number of directed paths i -> j in the quiver (0 or 1 on a tree).
    /// Row i is the dimension vector of the projective at vertex i.
    pub fn path_matrix(&self) -> crate::imat::IMat {
        let n = self.rank();
        let mut reach = vec![vec![0i64; n]; n];
        for i in 0..n {
            reach[i][i] = 1;
        }
        // saturate reachability along arrows
        let mut changed = true;
        while changed {
            changed = false;
            for &(s, t) in &self.arrows {
                for j in 0..n {
                    if reach[t - 1][j] == 1 && reach[s - 1][j] == 0 {
                        reach[s - 1][j] = 1;
                        changed = true;
                    }
                }
            }
        }
        reach
    }
}

/// Folding data for a non-simply-laced type: the simply-laced source, the
/// diagram automorphism as a vertex permutation, and the orbit weights.
#[derive(Debug, Clone)]
pub struct FoldingData {
    pub target: DynkinType,
    pub source: DynkinType,
    /// `iota[i-1]` is the image of source vertex i.
    pub iota: Vec<usize>,
    /// Source vertices forming the orbit behind each folded vertex, in the
    /// folded vertex order 1..=rank.
    pub orbits: Vec<Vec<usize>>,
    /// Orbit sizes, indexed like `orbits`.
    pub weights: Vec<usize>,
}

/// The folding table: B_n from D_{n+1} (fork swap), C_n from A_{2n-1}
/// (end-to-end flip), F4 from E6, G2 from D4 (leaf 3-cycle). Returns None
/// for simply-laced types.
pub fn folding_data(t: DynkinType) -> Option<FoldingData> {
    let n = t.rank();
    let source = t.source();
    let nn = source.rank();
    let (iota, orbits): (Vec<usize>, Vec<Vec<usize>>) = match t.family() {
        Family::B if n >= 3 => {
            // D_{n+1}: swap the fork vertices n and n+1.
            let mut iota: Vec<usize> = (1..=nn).collect();
            iota.swap(nn - 2, nn - 1);
            let mut orbits: Vec<Vec<usize>> = (1..n).map(|i| vec![i]).collect();
            orbits.push(vec![n, n + 1]);
            (iota, orbits)
        }
        Family::B | Family::C => {
            // A_{2n-1}: i <-> 2n-i.
            let iota: Vec<usize> = (1..=nn).map(|i| 2 * n - i).collect();
            let mut orbits: Vec<Vec<usize>> = (1..n).map(|i| vec![i, 2 * n - i]).collect();
            orbits.push(vec![n]);
            (iota, orbits)
        }
        Family::F => {
            // E6: (1 6)(2 5), fixing 3 and 4.
            let iota = vec![6, 5, 3, 4, 2, 1];
            let orbits = vec![vec![3], vec![4], vec![2, 5], vec![1, 6]];
            (iota, orbits)
        }
        Family::G => {
            // D4: rotate the three leaves 1 -> 3 -> 4 -> 1.
            let iota = vec![3, 2, 4, 1];
            let orbits = vec![vec![2], vec![1, 3, 4]];
            (iota, orbits)
        }
        _ => return None,
    };
    let weights = orbits.iter().map(Vec::len).collect();
    Some(FoldingData {
        target: t,
        source,
        iota,
        orbits,
        weights,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coxeter_numbers() {
        let h = |s: &str| DynkinType::parse(s).unwrap().coxeter_number();
        assert_eq!(h("E6"), 12);
        assert_eq!(h("D5"), 8);
        assert_eq!(h("A1"), 2);
        assert_eq!(h("B3"), 6);
        assert_eq!(h("C4"), 8);
        assert_eq!(h("E7"), 18);
        assert_eq!(h("E8"), 30);
        assert_eq!(h("F4"), 12);
        assert_eq!(h("G2"), 6);
    }

    #[test]
    fn parse_tags() {
        assert_eq!(DynkinType::parse("d5").unwrap().to_string(), "D5");
        assert!(DynkinType::parse("D3").is_err());
        assert!(DynkinType::parse("E9").is_err());
        assert!(DynkinType::parse("H4").is_err());
        assert!(DynkinType::parse("A0").is_err());
        assert!(DynkinType::parse("B2").is_ok());
    }

    #[test]
    fn branch_invariants() {
        for tag in ["A1", "A5", "D4", "D7", "E6", "E7", "E8"] {
            let t = DynkinType::parse(tag).unwrap();
            let (p, q, r) = t.branches().unwrap();
            assert_eq!(p + q + r - 2, t.rank(), "{tag}");
            let harmonic = 1.0 / p as f64 + 1.0 / q as f64 + 1.0 / r as f64;
            assert!(harmonic > 1.0, "{tag}");
        }
    }

    #[test]
    fn standard_orientations() {
        let a3 = Orientation::standard(DynkinType::parse("A3").unwrap());
        assert_eq!(a3.arrows(), &[(2, 1), (3, 2)]);
        assert_eq!(a3.far_end(), 1);

        let e7 = Orientation::standard(DynkinType::parse("E7").unwrap());
        assert_eq!(
            e7.arrows(),
            &[(2, 1), (4, 2), (4, 3), (4, 5), (5, 6), (6, 7)]
        );
        assert_eq!(e7.far_end(), 7);
        assert_eq!(e7.mid_end(), Some(1));
        assert_eq!(e7.near_end(), Some(3));

        let d4 = Orientation::with_far_end(DynkinType::parse("D4").unwrap(), 1).unwrap();
        assert_eq!(d4.far_end(), 1);
        assert!(Orientation::with_far_end(DynkinType::parse("D5").unwrap(), 4).is_err());
    }

    #[test]
    fn ends_are_leaves() {
        for tag in ["A4", "D5", "D4", "E6", "E7", "E8"] {
            let o = Orientation::standard(DynkinType::parse(tag).unwrap());
            assert_eq!(o.degree(o.far_end()), 1, "{tag}");
            for v in [o.mid_end(), o.near_end()].into_iter().flatten() {
                assert_eq!(o.degree(v), 1, "{tag}");
            }
        }
    }

    #[test]
    fn folding_tables() {
        let b3 = folding_data(DynkinType::parse("B3").unwrap()).unwrap();
        assert_eq!(b3.source.to_string(), "D4");
        assert_eq!(b3.iota, vec![1, 2, 4, 3]);
        assert_eq!(b3.weights, vec![1, 1, 2]);

        let g2 = folding_data(DynkinType::parse("G2").unwrap()).unwrap();
        assert_eq!(g2.source.to_string(), "D4");
        assert_eq!(g2.iota, vec![3, 2, 4, 1]);
        assert_eq!(g2.weights, vec![1, 3]);

        let f4 = folding_data(DynkinType::parse("F4").unwrap()).unwrap();
        assert_eq!(f4.source.to_string(), "E6");
        assert_eq!(f4.weights, vec![1, 1, 2, 2]);

        assert!(folding_data(DynkinType::parse("A5").unwrap()).is_none());

        // Orbit weights sum to the source rank; iota is an automorphism.
        for tag in ["B2", "B3", "B5", "C2", "C3", "C5", "F4", "G2"] {
            let f = folding_data(DynkinType::parse(tag).unwrap()).unwrap();
            assert_eq!(f.weights.iter().sum::<usize>(), f.source.rank(), "{tag}");
            let o = Orientation::standard(f.source);
            let mut edges: Vec<(usize, usize)> = o
                .arrows()
                .iter()
                .map(|&(s, t)| (s.min(t), s.max(t)))
                .collect();
            edges.sort_unstable();
            let mut mapped: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(s, t)| {
                    let (a, b) = (f.iota[s - 1], f.iota[t - 1]);
                    (a.min(b), a.max(b))
                })
                .collect();
            mapped.sort_unstable();
            assert_eq!(edges, mapped, "{tag}: iota must preserve the diagram");
        }
    }
}
