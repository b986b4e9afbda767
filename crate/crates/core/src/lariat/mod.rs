//! Lariats: multiplication of oriented lines modulo positive scale.
//!
//! Symbols stand for whole lines through the origin. A product of two
//! canonical representatives is either zero or a positive multiple of `±`
//! some symbol's representative; the sign and symbol form the table cell and
//! the positive multiple is reported separately as the scale.

mod sync;
mod tables;

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;

use crate::algebra::{Hypercomplex, Sign};
use crate::kite::{BoxKite, Orientation, Vertex};
use crate::{Error, Result};

pub use sync::{trip_sync_report, SailSync, SyncTrip, TripSyncReport};
pub use tables::{
    mock_octonion_symbols, mock_octonion_table, quizzical_lariats, switching_yard, LariatTable, QuizzicalLariat,
};

/// A line of a box-kite's switching yard.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LineSymbol {
    /// The positive real axis, identity of every lariat.
    Real,
    /// The unit `e_{2^(n-1)}` (written `8`).
    Eight,
    /// The unit `e_{2^(n-1) + s}` (written `X`).
    Excess,
    /// The unit `e_s` (written `S`).
    Strut,
    /// A vertex diagonal: upper case `/`, lower case `\`.
    Diagonal(Vertex, Orientation),
}

impl LineSymbol {
    /// Symbol order of the 16x16 switching yard.
    pub const YARD_ORDER: [LineSymbol; 16] = {
        use LineSymbol::*;
        use Orientation::{Backslash as L, Slash as U};
        use Vertex::*;
        [
            Real,
            Eight,
            Excess,
            Strut,
            Diagonal(F, U),
            Diagonal(A, L),
            Diagonal(F, L),
            Diagonal(A, U),
            Diagonal(E, U),
            Diagonal(B, L),
            Diagonal(E, L),
            Diagonal(B, U),
            Diagonal(D, U),
            Diagonal(C, L),
            Diagonal(D, L),
            Diagonal(C, U),
        ]
    };

    pub fn upper(v: Vertex) -> LineSymbol {
        LineSymbol::Diagonal(v, Orientation::Slash)
    }

    pub fn lower(v: Vertex) -> LineSymbol {
        LineSymbol::Diagonal(v, Orientation::Backslash)
    }

    /// Canonical representative in the box-kite's algebra.
    pub fn representative(&self, bk: &BoxKite) -> Hypercomplex {
        let n = bk.dim_exponent();
        let half = 1u32 << (n - 1);
        let unit = |i| Hypercomplex::basis(n, i).expect("index in range");
        match *self {
            LineSymbol::Real => unit(0),
            LineSymbol::Eight => unit(half),
            LineSymbol::Excess => unit(half + bk.strut_constant()),
            LineSymbol::Strut => unit(bk.strut_constant()),
            LineSymbol::Diagonal(v, o) => bk.diagonal(v, o).representative(),
        }
    }

    pub fn is_diagonal(&self) -> bool {
        matches!(self, LineSymbol::Diagonal(..))
    }
}

impl fmt::Display for LineSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineSymbol::Real => write!(f, "R"),
            LineSymbol::Eight => write!(f, "8"),
            LineSymbol::Excess => write!(f, "X"),
            LineSymbol::Strut => write!(f, "S"),
            LineSymbol::Diagonal(v, Orientation::Slash) => write!(f, "{}", v.letter()),
            LineSymbol::Diagonal(v, Orientation::Backslash) => write!(f, "{}", v.letter().to_ascii_lowercase()),
        }
    }
}

impl FromStr for LineSymbol {
    type Err = String;

    fn from_str(text: &str) -> std::result::Result<Self, String> {
        let mut chars = text.chars();
        let (Some(c), None) = (chars.next(), chars.next()) else {
            return Err(format!("not a line symbol: {text:?}"));
        };
        Ok(match c {
            'R' => LineSymbol::Real,
            '8' => LineSymbol::Eight,
            'X' => LineSymbol::Excess,
            'S' => LineSymbol::Strut,
            'A'..='F' => LineSymbol::upper(Vertex::from_letter(c).unwrap()),
            'a'..='f' => LineSymbol::lower(Vertex::from_letter(c).unwrap()),
            _ => return Err(format!("not a line symbol: {text:?}")),
        })
    }
}

/// A lariat table cell: zero or a signed line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cell {
    Zero,
    Line(Sign, LineSymbol),
}

impl Cell {
    pub fn plus(symbol: LineSymbol) -> Cell {
        Cell::Line(Sign::Plus, symbol)
    }

    pub fn minus(symbol: LineSymbol) -> Cell {
        Cell::Line(Sign::Minus, symbol)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Cell::Zero)
    }

    pub fn negated(self) -> Cell {
        match self {
            Cell::Zero => Cell::Zero,
            Cell::Line(s, sym) => Cell::Line(-s, sym),
        }
    }

    /// Renders without a `+` on positive lines, except `+R`, as printed in
    /// published lariat tables.
    pub fn compact(&self) -> String {
        match self {
            Cell::Line(Sign::Plus, sym) if *sym != LineSymbol::Real => sym.to_string(),
            other => other.to_string(),
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Zero => write!(f, "0"),
            Cell::Line(sign, sym) => write!(f, "{sign}{sym}"),
        }
    }
}

impl FromStr for Cell {
    type Err = String;

    /// Accepts both the signed form (`+A`, `-8`) and the compact form (`A`).
    fn from_str(text: &str) -> std::result::Result<Self, String> {
        let text = text.trim();
        if text == "0" {
            return Ok(Cell::Zero);
        }
        let (sign, rest) = match text.strip_prefix('-') {
            Some(rest) => (Sign::Minus, rest),
            None => (Sign::Plus, text.strip_prefix('+').unwrap_or(text)),
        };
        Ok(Cell::Line(sign, rest.parse()?))
    }
}

/// A lariat product: the table cell plus the positive scale factor that was
/// divided out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LariatProduct {
    pub cell: Cell,
    /// Content of the raw product; 0 when the product vanishes.
    pub scale: i64,
}

/// Multiplies the canonical representatives of `p` and `q` and collapses the
/// result onto a signed yard line.
pub fn lariat_product(bk: &BoxKite, p: LineSymbol, q: LineSymbol) -> Result<LariatProduct> {
    let raw = &p.representative(bk) * &q.representative(bk);
    if raw.is_zero() {
        return Ok(LariatProduct { cell: Cell::Zero, scale: 0 });
    }
    let (scale, primitive) = raw.primitive_part();
    let negated = -&primitive;
    for symbol in LineSymbol::YARD_ORDER {
        let rep = symbol.representative(bk);
        if rep == primitive {
            return Ok(LariatProduct { cell: Cell::plus(symbol), scale });
        }
        if rep == negated {
            return Ok(LariatProduct { cell: Cell::minus(symbol), scale });
        }
    }
    Err(Error::NonCollapsible { left: p.to_string(), right: q.to_string() })
}

/// Product of two cells, signs multiplied through.
pub fn cell_product(bk: &BoxKite, x: Cell, y: Cell) -> Result<Cell> {
    match (x, y) {
        (Cell::Line(sx, px), Cell::Line(sy, py)) => Ok(match lariat_product(bk, px, py)?.cell {
            Cell::Zero => Cell::Zero,
            Cell::Line(s, sym) => Cell::Line(sx * sy * s, sym),
        }),
        _ => Ok(Cell::Zero),
    }
}

/// Checks `(kP)(kQ) = scale * k^2 * result` in exact rational arithmetic,
/// where `scale` and `result` come from [`lariat_product`].
pub fn scale_law_holds(bk: &BoxKite, p: LineSymbol, q: LineSymbol, k: Rational64) -> Result<bool> {
    let product = lariat_product(bk, p, q)?;
    let lift = |x: &Hypercomplex| x.map_coeffs(|&c| Rational64::from_integer(c));
    let left = lift(&p.representative(bk)).scale(&k).checked_mul(&lift(&q.representative(bk)).scale(&k))?;
    let right = match product.cell {
        Cell::Zero => Hypercomplex::zero(bk.dim_exponent())?,
        Cell::Line(sign, sym) => {
            lift(&sym.representative(bk)).scale(&(Rational64::from_integer(product.scale * sign.to_i64()) * k * k))
        }
    };
    Ok(left == right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kite::build_box_kite;

    fn sym(s: &str) -> LineSymbol {
        s.parse().unwrap()
    }

    #[test]
    fn published_products() {
        let bk = build_box_kite(1).unwrap();
        let fa = lariat_product(&bk, sym("F"), sym("a")).unwrap();
        assert_eq!((fa.cell, fa.scale), (Cell::plus(LineSymbol::Eight), 2));
        let eight_f = lariat_product(&bk, sym("8"), sym("F")).unwrap();
        assert_eq!((eight_f.cell, eight_f.scale), (Cell::plus(sym("a")), 1));
        // F-E is a `-` edge: opposite orientations vanish, like ones do not
        assert_eq!(lariat_product(&bk, sym("F"), sym("e")).unwrap().cell, Cell::Zero);
        assert_eq!(lariat_product(&bk, sym("F"), sym("E")).unwrap().cell, Cell::minus(sym("c")));
        let aa = lariat_product(&bk, sym("A"), sym("A")).unwrap();
        assert_eq!((aa.cell, aa.scale), (Cell::minus(LineSymbol::Real), 2));
    }

    #[test]
    fn cell_text_round_trip() {
        for text in ["0", "+R", "-R", "+8", "-X", "+S", "-a", "+F"] {
            let cell: Cell = text.parse().unwrap();
            assert_eq!(cell.to_string(), text);
        }
        assert_eq!("A".parse::<Cell>().unwrap(), Cell::plus(sym("A")));
        assert_eq!(Cell::plus(LineSymbol::Real).compact(), "+R");
        assert_eq!(Cell::plus(sym("f")).compact(), "f");
        assert!("G".parse::<Cell>().is_err());
        assert!("AB".parse::<LineSymbol>().is_err());
    }

    #[test]
    fn scale_law_on_abc() {
        let bk = build_box_kite(1).unwrap();
        let half = Rational64::new(1, 2);
        for (p, q) in [("A", "B"), ("B", "C"), ("C", "A"), ("a", "b")] {
            let product = lariat_product(&bk, sym(p), sym(q)).unwrap();
            assert_eq!(product.scale, 2);
            for k in [Rational64::from_integer(1), half] {
                assert!(scale_law_holds(&bk, sym(p), sym(q), k).unwrap());
            }
        }
        assert_eq!(lariat_product(&bk, sym("A"), sym("B")).unwrap().cell, Cell::plus(sym("C")));
    }
}
