//! Named parameter slots and points in parameter space.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::QError;

/// Every free symbol an identity may depend on, besides the base `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    A,
    B,
    C,
    D,
    R,
    U,
    V,
    X,
    S,
    T,
    Z,
    A1,
    A2,
    A3,
    B1,
    B2,
}

impl Slot {
    pub const ALL: [Slot; 16] = [
        Slot::A,
        Slot::B,
        Slot::C,
        Slot::D,
        Slot::R,
        Slot::U,
        Slot::V,
        Slot::X,
        Slot::S,
        Slot::T,
        Slot::Z,
        Slot::A1,
        Slot::A2,
        Slot::A3,
        Slot::B1,
        Slot::B2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Slot::A => "a",
            Slot::B => "b",
            Slot::C => "c",
            Slot::D => "d",
            Slot::R => "r",
            Slot::U => "u",
            Slot::V => "v",
            Slot::X => "x",
            Slot::S => "s",
            Slot::T => "t",
            Slot::Z => "z",
            Slot::A1 => "a1",
            Slot::A2 => "a2",
            Slot::A3 => "a3",
            Slot::B1 => "b1",
            Slot::B2 => "b2",
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Slot {
    type Err = QError;

    fn from_str(s: &str) -> Result<Self, QError> {
        Slot::ALL
            .into_iter()
            .find(|slot| slot.name() == s)
            .ok_or_else(|| QError::Domain(format!("unknown parameter slot '{s}'")))
    }
}

/// Values that can sit in a parameter slot.
pub trait SlotValue: Clone + fmt::Debug + PartialEq + Send + Sync {
    fn zero() -> Self;
}

impl SlotValue for num_complex::Complex64 {
    fn zero() -> Self {
        num_complex::Complex64::new(0.0, 0.0)
    }
}

impl SlotValue for crate::exact::Monomial {
    fn zero() -> Self {
        crate::exact::Monomial::zero()
    }
}

/// An assignment of values to `q` and the named slots. Absent slots read as 0.
#[derive(Clone, PartialEq)]
pub struct ParameterPoint<T> {
    pub q: T,
    values: BTreeMap<Slot, T>,
    /// Angle in radians, numeric mode only.
    pub theta: Option<f64>,
}

impl<T: SlotValue> ParameterPoint<T> {
    pub fn new(q: T) -> Self {
        Self {
            q,
            values: BTreeMap::new(),
            theta: None,
        }
    }

    pub fn with(mut self, slot: Slot, value: T) -> Self {
        self.set(slot, value);
        self
    }

    pub fn set(&mut self, slot: Slot, value: T) {
        self.values.insert(slot, value);
    }

    pub fn get(&self, slot: Slot) -> T {
        self.values.get(&slot).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_set(&self, slot: Slot) -> bool {
        self.values.contains_key(&slot)
    }

    /// Explicitly assigned slots in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (Slot, &T)> {
        self.values.iter().map(|(s, v)| (*s, v))
    }

    /// The point with every value, including `q`, passed through `f`.
    pub fn map<U: SlotValue>(&self, f: impl Fn(&T) -> U) -> ParameterPoint<U> {
        ParameterPoint {
            q: f(&self.q),
            values: self.values.iter().map(|(s, v)| (*s, f(v))).collect(),
            theta: self.theta,
        }
    }

    /// The same point with the values of two slots exchanged.
    pub fn swapped(&self, first: Slot, second: Slot) -> Self {
        let mut out = self.clone();
        out.set(first, self.get(second));
        out.set(second, self.get(first));
        out
    }
}

impl<T: fmt::Debug> fmt::Debug for ParameterPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        m.entry(&"q", &self.q);
        for (k, v) in &self.values {
            m.entry(&k.name(), v);
        }
        if let Some(t) = self.theta {
            m.entry(&"theta", &t);
        }
        m.finish()
    }
}
