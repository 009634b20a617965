use super::GroupError;

/// Disjoint sets with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    /// Groups `0..n` by representative. Groups are sorted by their smallest
    /// member and each group is sorted ascending.
    pub fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(x);
        }
        groups
    }
}

/// Partition of `0..n` into orbits, labelled `0, 1, ...` in order of each
/// orbit's smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    labels: Vec<usize>,
    orbits: Vec<Vec<usize>>,
}

impl OrbitPartition {
    pub fn from_orbits(n: usize, orbits: Vec<Vec<usize>>) -> Self {
        let mut labels = vec![0; n];
        for (id, orbit) in orbits.iter().enumerate() {
            for &x in orbit {
                labels[x] = id;
            }
        }
        OrbitPartition { labels, orbits }
    }

    pub fn domain_size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, x: usize) -> usize {
        self.labels[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit_of(&self, x: usize) -> &[usize] {
        &self.orbits[self.labels[x]]
    }

    pub fn count(&self) -> usize {
        self.orbits.len()
    }

    /// Smallest member of each orbit.
    pub fn representatives(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o[0]).collect()
    }
}

/// Orbits of `0..n` under the group generated by `maps`.
pub fn orbits_under(maps: &[Vec<usize>], n: usize) -> Result<OrbitPartition, GroupError> {
    let mut uf = UnionFind::new(n);
    for (m, map) in maps.iter().enumerate() {
        if map.len() != n || !crate::perm::is_permutation(map) {
            return Err(GroupError::MalformedPermutation(format!(
                "map {m} is not a permutation of 0..{n}"
            )));
        }
        for (x, &y) in map.iter().enumerate() {
            uf.union(x, y);
        }
    }
    Ok(OrbitPartition::from_orbits(n, uf.groups()))
}
