use std::cmp::Ordering;
use std::fmt;

/// One of the three homogeneous coordinates of the projective plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Axis {
        Axis::ALL[i]
    }

    pub fn symbol(self) -> char {
        match self {
            Axis::X => 'X',
            Axis::Y => 'Y',
            Axis::Z => 'Z',
        }
    }

    /// The coordinate point where only this coordinate is nonzero, e.g. `(0:0:1)` for Z.
    pub fn point_label(self) -> &'static str {
        match self {
            Axis::X => "(1:0:0)",
            Axis::Y => "(0:1:0)",
            Axis::Z => "(0:0:1)",
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// `X^i Y^j Z^k`, stored as `[i, j, k]`.
///
/// The `Ord` implementation is the graded reverse-lexicographic order with
/// `X > Y > Z`: higher total degree is larger, and among monomials of equal
/// degree the one with the smaller exponent in the last differing variable
/// (scanning Z, then Y) is larger.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn new(x: u32, y: u32, z: u32) -> Self {
        Monomial([x, y, z])
    }

    pub fn var(axis: Axis) -> Self {
        Self::pure_power(axis, 1)
    }

    pub fn pure_power(axis: Axis, exponent: u32) -> Self {
        let mut e = [0; 3];
        e[axis.index()] = exponent;
        Monomial(e)
    }

    #[inline]
    pub fn exponents(&self) -> [u32; 3] {
        self.0
    }

    #[inline]
    pub fn exponent(&self, axis: Axis) -> u32 {
        self.0[axis.index()]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The axis this monomial is a pure power of, if any. The constant
    /// monomial is not considered a pure power of any single axis.
    pub fn pure_power_axis(&self) -> Option<Axis> {
        let nonzero: Vec<usize> = (0..3).filter(|&i| self.0[i] > 0).collect();
        match nonzero.as_slice() {
            [i] => Some(Axis::from_index(*i)),
            _ => None,
        }
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    #[inline]
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial([
                other.0[0] - self.0[0],
                other.0[1] - self.0[1],
                other.0[2] - self.0[2],
            ]))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0].max(other.0[0]),
            self.0[1].max(other.0[1]),
            self.0[2].max(other.0[2]),
        ])
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0].min(other.0[0]),
            self.0[1].min(other.0[1]),
            self.0[2].min(other.0[2]),
        ])
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.gcd(other) == Monomial::ONE
    }

    /// Moves the exponent of variable `i` to variable `perm[i]`.
    pub fn permuted(&self, perm: [Axis; 3]) -> Monomial {
        let mut e = [0; 3];
        for (i, target) in perm.iter().enumerate() {
            e[target.index()] = self.0[i];
        }
        Monomial(e)
    }

    /// All monomials of total degree `d`, in descending degrevlex order.
    pub fn all_of_degree(d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for i in 0..=d {
            for j in 0..=(d - i) {
                out.push(Monomial([i, j, d - i - j]));
            }
        }
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0[2].cmp(&self.0[2]))
            .then_with(|| other.0[1].cmp(&self.0[1]))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::ONE {
            return write!(f, "1");
        }
        let mut first = true;
        for axis in Axis::ALL {
            let e = self.exponent(axis);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{axis}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
