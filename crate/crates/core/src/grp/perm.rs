use crate::error::{Error, Result};

/// Permutation of 0..degree in image form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm {
    image: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            image: (0..degree as u16).collect(),
        }
    }

    pub fn from_images(image: Vec<u16>) -> Result<Perm> {
        let mut seen = vec![false; image.len()];
        for &i in &image {
            if (i as usize) >= image.len() || seen[i as usize] {
                return Err(Error::invariant("not a permutation"));
            }
            seen[i as usize] = true;
        }
        Ok(Perm { image })
    }

    /// Build from disjoint cycles over 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut image: Vec<u16> = (0..degree as u16).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::parse(format!("point {} out of range", p + 1)));
                }
                if touched[p] {
                    return Err(Error::parse(format!("point {} repeated in cycles", p + 1)));
                }
                touched[p] = true;
                image[p] = cycle[(k + 1) % cycle.len()] as u16;
            }
        }
        Ok(Perm { image })
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.image[point] as usize
    }

    /// Composite "self then other": (self.then(other))(x) = other(self(x)).
    /// Matches left-to-right word evaluation.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            image: self.image.iter().map(|&i| other.image[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut image = vec![0u16; self.image.len()];
        for (i, &j) in self.image.iter().enumerate() {
            image[j as usize] = i as u16;
        }
        Perm { image }
    }

    /// Extend to a larger degree, fixing the new points.
    pub fn padded(&self, degree: usize) -> Perm {
        let mut image = self.image.clone();
        image.extend(image.len() as u16..degree as u16);
        Perm { image }
    }
}
