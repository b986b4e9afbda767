use super::{cell_product, lariat_product, Cell, LineSymbol};
use crate::algebra::blade_sign;
use crate::kite::{BoxKite, Orientation, Sail, Strut};
use crate::Result;

/// A square lariat multiplication table over a list of line symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LariatTable {
    symbols: Vec<LineSymbol>,
    cells: Vec<Vec<Cell>>,
    scales: Vec<Vec<i64>>,
}

impl LariatTable {
    /// Computes every product `row * column` over `symbols`.
    pub fn build(bk: &BoxKite, symbols: &[LineSymbol]) -> Result<LariatTable> {
        let mut cells = Vec::with_capacity(symbols.len());
        let mut scales = Vec::with_capacity(symbols.len());
        for &p in symbols {
            let mut row = Vec::with_capacity(symbols.len());
            let mut row_scales = Vec::with_capacity(symbols.len());
            for &q in symbols {
                let product = lariat_product(bk, p, q)?;
                row.push(product.cell);
                row_scales.push(product.scale);
            }
            cells.push(row);
            scales.push(row_scales);
        }
        Ok(LariatTable { symbols: symbols.to_vec(), cells, scales })
    }

    pub fn symbols(&self) -> &[LineSymbol] {
        &self.symbols
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    fn position(&self, symbol: LineSymbol) -> Option<usize> {
        self.symbols.iter().position(|&s| s == symbol)
    }

    pub fn cell(&self, row: LineSymbol, column: LineSymbol) -> Option<Cell> {
        Some(self.cells[self.position(row)?][self.position(column)?])
    }

    pub fn scale(&self, row: LineSymbol, column: LineSymbol) -> Option<i64> {
        Some(self.scales[self.position(row)?][self.position(column)?])
    }

    pub fn zero_count(&self) -> usize {
        self.cells.iter().flatten().filter(|c| c.is_zero()).count()
    }

    /// Every nonzero cell names a symbol of the table itself.
    pub fn is_closed(&self) -> bool {
        self.cells.iter().flatten().all(|c| match c {
            Cell::Zero => true,
            Cell::Line(_, sym) => self.symbols.contains(sym),
        })
    }

    /// The table restricted to `symbols`, in that order.
    pub fn restrict(&self, symbols: &[LineSymbol]) -> Option<LariatTable> {
        let idx: Vec<usize> = symbols.iter().map(|&s| self.position(s)).collect::<Option<_>>()?;
        fn pick<T: Copy>(grid: &[Vec<T>], idx: &[usize]) -> Vec<Vec<T>> {
            idx.iter().map(|&i| idx.iter().map(|&j| grid[i][j]).collect()).collect()
        }
        Some(LariatTable {
            symbols: symbols.to_vec(),
            cells: pick(&self.cells, &idx),
            scales: pick(&self.scales, &idx),
        })
    }

    /// True when the table is the octonion table under `symbols[k] -> e_k`:
    /// every cell `(i, j)` equals `sign(e_i e_j) * symbols[i xor j]`.
    pub fn is_octonion_isomorphic(&self) -> bool {
        self.size() == 8
            && (0..8).all(|i| {
                (0..8).all(|j| {
                    let expected = Cell::Line(blade_sign(i as u32, j as u32), self.symbols[i ^ j]);
                    self.cells[i][j] == expected
                })
            })
    }
}

/// Symbols `(R, 8, X, S, P, q, p, Q)` of the mock octonion lariat on a strut,
/// where `(P, Q)` is `(F, A)`, `(E, B)` or `(D, C)`.
pub fn mock_octonion_symbols(strut: Strut) -> [LineSymbol; 8] {
    let (p, q) = strut.ends();
    [
        LineSymbol::Real,
        LineSymbol::Eight,
        LineSymbol::Excess,
        LineSymbol::Strut,
        LineSymbol::upper(p),
        LineSymbol::lower(q),
        LineSymbol::lower(p),
        LineSymbol::upper(q),
    ]
}

/// The 8x8 lariat of a strut combined with the box-kite's 8-ball.
pub fn mock_octonion_table(bk: &BoxKite, strut: Strut) -> Result<LariatTable> {
    LariatTable::build(bk, &mock_octonion_symbols(strut))
}

/// The full 16x16 table over `R, 8, X, S` and the twelve vertex diagonals.
pub fn switching_yard(bk: &BoxKite) -> Result<LariatTable> {
    LariatTable::build(bk, &LineSymbol::YARD_ORDER)
}

/// An orientation-coherent triple on a sign-switched sail, behaving like
/// Hamilton's `i, j, k` with the real line in place of `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuizzicalLariat {
    pub sail: Sail,
    pub triple: [LineSymbol; 3],
    /// Identity-free 3x3 table over `triple`.
    pub table: LariatTable,
    /// `(x y) z` for the triple in order.
    pub triple_product: Cell,
}

impl QuizzicalLariat {
    /// `x^2 = y^2 = z^2 = xyz = -R`.
    pub fn satisfies_hamilton(&self) -> bool {
        let minus_r = Cell::minus(LineSymbol::Real);
        self.triple.iter().all(|&x| self.table.cell(x, x) == Some(minus_r)) && self.triple_product == minus_r
    }

    /// Compact form such as `Ade`.
    pub fn name(&self) -> String {
        self.triple.iter().map(|s| s.to_string()).collect()
    }
}

/// The eight quizzical quaternion lariats of a box-kite: two per sail, the
/// first starting from the `/` diagonal of the sail's first vertex.
///
/// Orientation is kept across an original `-` edge and flipped across a `+`
/// edge, i.e. the zero-divisor rule with every edge sign switched.
pub fn quizzical_lariats(bk: &BoxKite) -> Result<Vec<QuizzicalLariat>> {
    let mut out = Vec::with_capacity(8);
    for sail in Sail::ALL {
        for start in [Orientation::Slash, Orientation::Backslash] {
            let [v0, v1, v2] = sail.vertices;
            let edge = |u, v| bk.edge(u, v).expect("sail edge").toggled();
            let o1 = start.across(edge(v0, v1));
            let o2 = o1.across(edge(v1, v2));
            let triple = [LineSymbol::Diagonal(v0, start), LineSymbol::Diagonal(v1, o1), LineSymbol::Diagonal(v2, o2)];
            let table = LariatTable::build(bk, &triple)?;
            let xy = cell_product(bk, Cell::plus(triple[0]), Cell::plus(triple[1]))?;
            let triple_product = cell_product(bk, xy, Cell::plus(triple[2]))?;
            out.push(QuizzicalLariat { sail, triple, table, triple_product });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kite::build_box_kite;

    #[test]
    fn quizzical_names_for_box_kite_one() {
        let bk = build_box_kite(1).unwrap();
        let names: Vec<String> = quizzical_lariats(&bk).unwrap().iter().map(QuizzicalLariat::name).collect();
        assert_eq!(names, vec!["ABC", "abc", "Ade", "aDE", "FcE", "fCe", "FDb", "fdB"]);
    }

    #[test]
    fn quizzicals_are_hamiltonian() {
        for s in 1..8 {
            let bk = build_box_kite(s).unwrap();
            for q in quizzical_lariats(&bk).unwrap() {
                assert!(q.satisfies_hamilton(), "s={s} {}", q.name());
            }
        }
    }

    #[test]
    fn mock_octonion_cells() {
        let bk = build_box_kite(1).unwrap();
        let t = mock_octonion_table(&bk, Strut::AF).unwrap();
        let c = |x: &str, y: &str| t.cell(x.parse().unwrap(), y.parse().unwrap()).unwrap();
        assert_eq!(c("8", "X"), "S".parse().unwrap());
        assert_eq!(c("f", "A"), "-8".parse().unwrap());
        for &y in t.symbols() {
            assert_eq!(t.cell(LineSymbol::Real, y), Some(Cell::plus(y)));
        }
        assert!(t.is_octonion_isomorphic());
        assert!(t.is_closed());
    }

    #[test]
    fn yard_shape() {
        let bk = build_box_kite(1).unwrap();
        let yard = switching_yard(&bk).unwrap();
        assert_eq!(yard.zero_count(), 48);
        assert!(yard.is_closed());
        for strut in Strut::ALL {
            let sub = yard.restrict(&mock_octonion_symbols(strut)).unwrap();
            assert_eq!(sub, mock_octonion_table(&bk, strut).unwrap());
        }
    }
}
