use std::collections::BTreeSet;

use super::blade::{blade_sign, BasisBlade, Sign};

pub type LoopElement = BasisBlade;

/// The finite loop `{±e_0} ∪ {±e_i : i in axes}` under the basis product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitLoop {
    axes: BTreeSet<u32>,
    added_axes: BTreeSet<u32>,
}

impl UnitLoop {
    /// Nonzero axis indices (after closure).
    pub fn axes(&self) -> &BTreeSet<u32> {
        &self.axes
    }

    /// Axes the closure had to add to the input; empty iff the input was
    /// already closed.
    pub fn added_axes(&self) -> &BTreeSet<u32> {
        &self.added_axes
    }

    pub fn input_was_closed(&self) -> bool {
        self.added_axes.is_empty()
    }

    pub fn len(&self) -> usize {
        2 * (self.axes.len() + 1)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> Vec<LoopElement> {
        std::iter::once(0)
            .chain(self.axes.iter().copied())
            .flat_map(|i| [BasisBlade::new(Sign::Plus, i), BasisBlade::new(Sign::Minus, i)])
            .collect()
    }

    /// True for the quaternion group: eight elements, associative, with `-1`
    /// as the only involution.
    pub fn is_quaternion_group(&self) -> bool {
        if self.len() != 8 || !check_identity(self, LoopIdentity::Associative).holds() {
            return false;
        }
        let minus_one = BasisBlade::new(Sign::Minus, 0);
        let one = BasisBlade::positive(0);
        let involutions = self.elements().into_iter().filter(|&x| x != one && product(x, x) == one).collect::<Vec<_>>();
        involutions == vec![minus_one]
    }
}

fn product(x: LoopElement, y: LoopElement) -> LoopElement {
    BasisBlade::new(x.sign * y.sign * blade_sign(x.index, y.index), x.index ^ y.index)
}

/// Closes `axes` under the basis product. Index 0 in the input is ignored.
pub fn loop_closure(axes: impl IntoIterator<Item = u32>) -> UnitLoop {
    let input: BTreeSet<u32> = axes.into_iter().filter(|&i| i != 0).collect();
    let mut closed = input.clone();
    loop {
        let fresh: BTreeSet<u32> = closed
            .iter()
            .flat_map(|&a| closed.iter().map(move |&b| a ^ b))
            .filter(|&c| c != 0 && !closed.contains(&c))
            .collect();
        if fresh.is_empty() {
            break;
        }
        closed.extend(fresh);
    }
    let added_axes = closed.difference(&input).copied().collect();
    UnitLoop { axes: closed, added_axes }
}

/// Loop identities checked exhaustively by [`check_identity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LoopIdentity {
    /// `(xy)z = x(yz)`
    Associative,
    /// `(xx)y = x(xy)` and `(yx)x = y(xx)`
    Alternative,
    /// `(xy)x = x(yx)`
    Flexible,
    /// `(xy)(zx) = x((yz)x)`
    Moufang,
    /// `z(x(zy)) = ((zx)z)y`
    MoufangLeft,
    /// `x(z(yz)) = ((xz)y)z`
    MoufangRight,
}

impl LoopIdentity {
    pub const ALL: [LoopIdentity; 6] = [
        LoopIdentity::Associative,
        LoopIdentity::Alternative,
        LoopIdentity::Flexible,
        LoopIdentity::Moufang,
        LoopIdentity::MoufangLeft,
        LoopIdentity::MoufangRight,
    ];

    pub const MOUFANG_FORMS: [LoopIdentity; 3] =
        [LoopIdentity::Moufang, LoopIdentity::MoufangLeft, LoopIdentity::MoufangRight];

    pub fn name(self) -> &'static str {
        match self {
            LoopIdentity::Associative => "associative",
            LoopIdentity::Alternative => "alternative",
            LoopIdentity::Flexible => "flexible",
            LoopIdentity::Moufang => "moufang",
            LoopIdentity::MoufangLeft => "moufang-left",
            LoopIdentity::MoufangRight => "moufang-right",
        }
    }

    fn holds_for(self, x: LoopElement, y: LoopElement, z: LoopElement) -> bool {
        let m = product;
        match self {
            LoopIdentity::Associative => m(m(x, y), z) == m(x, m(y, z)),
            LoopIdentity::Alternative => m(m(x, x), y) == m(x, m(x, y)) && m(m(y, x), x) == m(y, m(x, x)),
            LoopIdentity::Flexible => m(m(x, y), x) == m(x, m(y, x)),
            LoopIdentity::Moufang => m(m(x, y), m(z, x)) == m(x, m(m(y, z), x)),
            LoopIdentity::MoufangLeft => m(z, m(x, m(z, y))) == m(m(m(z, x), z), y),
            LoopIdentity::MoufangRight => m(x, m(z, m(y, z))) == m(m(m(x, z), y), z),
        }
    }
}

/// Outcome of an exhaustive identity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityCheck {
    Pass,
    /// The first `(x, y, z)` in element order violating the identity.
    Counterexample(LoopElement, LoopElement, LoopElement),
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        matches!(self, IdentityCheck::Pass)
    }
}

/// Tests `identity` on every ordered triple of loop elements.
pub fn check_identity(unit_loop: &UnitLoop, identity: LoopIdentity) -> IdentityCheck {
    let elements = unit_loop.elements();
    for &x in &elements {
        for &y in &elements {
            for &z in &elements {
                if !identity.holds_for(x, y, z) {
                    return IdentityCheck::Counterexample(x, y, z);
                }
            }
        }
    }
    IdentityCheck::Pass
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_sizes() {
        let q = loop_closure([1, 2, 3]);
        assert_eq!(q.len(), 8);
        assert!(q.input_was_closed());
        let c = loop_closure([1]);
        assert_eq!(c.len(), 4);
        let grown = loop_closure([1, 2]);
        assert_eq!(grown.added_axes().iter().copied().collect::<Vec<_>>(), vec![3]);
        let auto = loop_closure([3, 6, 5, 9, 10, 12, 15]);
        assert_eq!(auto.len(), 16);
        assert!(auto.input_was_closed());
    }

    #[test]
    fn quaternions_associate() {
        let q = loop_closure([1, 2, 3]);
        assert!(check_identity(&q, LoopIdentity::Associative).holds());
        assert!(q.is_quaternion_group());
        assert!(!loop_closure([1]).is_quaternion_group());
    }

    #[test]
    fn octonions_are_moufang_not_associative() {
        let o = loop_closure(1..8);
        for id in LoopIdentity::MOUFANG_FORMS {
            assert!(check_identity(&o, id).holds(), "{}", id.name());
        }
        assert!(!check_identity(&o, LoopIdentity::Associative).holds());
    }

    #[test]
    fn quasi_octonion_loop_fails_moufang() {
        let l = loop_closure([3, 6, 5, 9, 10, 12, 15]);
        let IdentityCheck::Counterexample(x, y, z) = check_identity(&l, LoopIdentity::Moufang) else {
            panic!("expected a Moufang counterexample");
        };
        assert_ne!(product(product(x, y), product(z, x)), product(x, product(product(y, z), x)));
        assert!(check_identity(&l, LoopIdentity::Flexible).holds());
    }
}
