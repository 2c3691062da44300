use super::{Element, SetSystem, SubsetMask};

/// A bijection between two ground sets carrying one family onto the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    map: Vec<Element>,
}

impl Isomorphism {
    pub fn identity(n: usize) -> Self {
        Isomorphism { map: (0..n).collect() }
    }

    /// Image of a source element.
    pub fn image(&self, element: Element) -> Element {
        self.map[element]
    }

    pub fn as_slice(&self) -> &[Element] {
        &self.map
    }

    pub fn apply(&self, mask: SubsetMask) -> SubsetMask {
        SubsetMask::from_elements(mask.iter().map(|e| self.map[e]))
    }

    /// `(source label, target label)` pairs in source order.
    pub fn label_pairs<'a>(&self, source: &'a SetSystem, target: &'a SetSystem) -> Vec<(&'a str, &'a str)> {
        self.map
            .iter()
            .enumerate()
            .map(|(s, &t)| (source.ground().label(s), target.ground().label(t)))
            .collect()
    }

    /// True if this bijection maps `source`'s family exactly onto `target`'s.
    pub fn verify(&self, source: &SetSystem, target: &SetSystem) -> bool {
        if self.map.len() != source.n() || source.n() != target.n() || source.len() != target.len() {
            return false;
        }
        let mut seen = 0u64;
        for &t in &self.map {
            if t >= target.n() || seen >> t & 1 == 1 {
                return false;
            }
            seen |= 1 << t;
        }
        let mut image: Vec<SubsetMask> = source.family().iter().map(|&m| self.apply(m)).collect();
        image.sort_unstable();
        image == target.family()
    }
}

impl SetSystem {
    /// Search for a label bijection carrying this family onto `other`'s.
    ///
    /// Backtracking over element assignments; a partial assignment survives
    /// only if the families restricted to the assigned elements agree as
    /// multisets, which subsumes degree and co-degree pruning.
    pub fn find_isomorphism(&self, other: &SetSystem) -> Option<Isomorphism> {
        let n = self.n();
        if n != other.n() || self.len() != other.len() {
            return None;
        }
        let sizes = |s: &SetSystem| s.family().iter().map(|m| m.len()).collect::<Vec<_>>();
        if sizes(self) != sizes(other) {
            return None;
        }
        let degrees = |s: &SetSystem| {
            (0..n)
                .map(|e| s.family().iter().filter(|m| m.contains(e)).count())
                .collect::<Vec<_>>()
        };
        let deg1 = degrees(self);
        let deg2 = degrees(other);
        let mut sorted1 = deg1.clone();
        let mut sorted2 = deg2.clone();
        sorted1.sort_unstable();
        sorted2.sort_unstable();
        if sorted1 != sorted2 {
            return None;
        }

        let mut search = Search {
            source: self.family(),
            target: other.family(),
            deg1: &deg1,
            deg2: &deg2,
            map: vec![usize::MAX; n],
            used: 0,
            buf1: Vec::with_capacity(self.len()),
            buf2: Vec::with_capacity(self.len()),
        };
        if search.extend(0) {
            Some(Isomorphism { map: search.map })
        } else {
            None
        }
    }
}

struct Search<'a> {
    source: &'a [SubsetMask],
    target: &'a [SubsetMask],
    deg1: &'a [usize],
    deg2: &'a [usize],
    map: Vec<Element>,
    used: u64,
    buf1: Vec<u64>,
    buf2: Vec<u64>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let n = self.map.len();
        if depth == n {
            return true;
        }
        for t in 0..n {
            if self.used >> t & 1 == 1 || self.deg1[depth] != self.deg2[t] {
                continue;
            }
            self.map[depth] = t;
            self.used |= 1 << t;
            if self.prefix_consistent(depth + 1) && self.extend(depth + 1) {
                return true;
            }
            self.used &= !(1 << t);
        }
        self.map[depth] = usize::MAX;
        false
    }

    /// Compare the multisets `{map(F ∩ assigned)}` and `{G ∩ map(assigned)}`.
    fn prefix_consistent(&mut self, assigned: usize) -> bool {
        let domain = SubsetMask::full(assigned);
        let range = SubsetMask::from_bits(self.used);
        self.buf1.clear();
        self.buf2.clear();
        for &m in self.source {
            let mut img = 0u64;
            for e in (m & domain).iter() {
                img |= 1 << self.map[e];
            }
            self.buf1.push(img);
        }
        for &m in self.target {
            self.buf2.push((m & range).bits());
        }
        self.buf1.sort_unstable();
        self.buf2.sort_unstable();
        self.buf1 == self.buf2
    }
}
