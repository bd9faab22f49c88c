//! Permutations on a fixed number of points, with cycle notation.

/// A permutation of `{0, .., m-1}`, stored as its image vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(m: usize) -> Perm {
        Perm {
            images: (0..m).collect(),
        }
    }

    /// Builds from an image vector; must be a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Perm> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &v in &images {
            if v >= m || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Perm { images })
    }

    /// Builds from disjoint cycles over 0-based points.
    pub fn from_cycles(m: usize, cycles: &[Vec<usize>]) -> Option<Perm> {
        let mut images: Vec<usize> = (0..m).collect();
        let mut touched = vec![false; m];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= m || touched[p] {
                    return None;
                }
                touched[p] = true;
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Some(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// `self * other` applies `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            images: (0..self.degree()).map(|x| self.images[other.images[x]]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Perm { images }
    }

    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.degree()];
        let mut transpositions = 0;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Cycle notation over 1-based points, fixed points omitted; the
    /// identity renders as `()`.
    pub fn cycle_notation(&self) -> String {
        let mut seen = vec![false; self.degree()];
        let mut out = String::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push('(');
            out.push_str(
                &cycle
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// All permutations of `m` points in lexicographic order of image vectors.
pub fn all_perms(m: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..m).collect();
    loop {
        out.push(Perm {
            images: current.clone(),
        });
        // next lexicographic permutation
        let Some(i) = (0..current.len().saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..current.len()).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_first() {
        // (1 2) then (2 3): 1 -> 2 -> 3
        let a = Perm::from_cycles(3, &[vec![1, 2]]).unwrap(); // (2 3) 0-based
        let b = Perm::from_cycles(3, &[vec![0, 1]]).unwrap(); // (1 2) 0-based
        let c = a.compose(&b);
        assert_eq!(c.apply(0), 2);
        assert_eq!(c.cycle_notation(), "(1 3 2)");
    }

    #[test]
    fn inverse_roundtrip() {
        let p = Perm::from_images(vec![2, 0, 1, 4, 3]).unwrap();
        assert_eq!(p.compose(&p.inverse()), Perm::identity(5));
        assert_eq!(p.inverse().compose(&p), Perm::identity(5));
    }

    #[test]
    fn parity() {
        assert!(Perm::identity(4).is_even());
        assert!(!Perm::from_cycles(4, &[vec![0, 1]]).unwrap().is_even());
        assert!(Perm::from_cycles(4, &[vec![0, 1, 2]]).unwrap().is_even());
        assert!(Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap().is_even());
    }

    #[test]
    fn cycle_notation_formats() {
        assert_eq!(Perm::identity(3).cycle_notation(), "()");
        let p = Perm::from_cycles(5, &[vec![0, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.cycle_notation(), "(1 3)(4 5)");
    }

    #[test]
    fn all_perms_is_lexicographic() {
        let ps = all_perms(3);
        assert_eq!(ps.len(), 6);
        assert_eq!(ps[0], Perm::identity(3));
        for w in ps.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn rejects_repeated_points() {
        assert!(Perm::from_cycles(3, &[vec![0, 0, 1]]).is_none());
        assert!(Perm::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_none());
        assert!(Perm::from_images(vec![0, 0, 1]).is_none());
    }
}
