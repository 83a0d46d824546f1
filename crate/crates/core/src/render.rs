//! Text rendering of tableaux as boxed grids.

use crate::diagram::Cell;
use crate::tableau::{Letter, Tableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Style {
    #[default]
    Ascii,
    Unicode,
}

struct Glyphs {
    corner: char,
    horiz: char,
    vert: char,
}

impl Style {
    fn glyphs(self) -> Glyphs {
        match self {
            Style::Ascii => Glyphs { corner: '+', horiz: '-', vert: '|' },
            Style::Unicode => Glyphs { corner: '┼', horiz: '─', vert: '│' },
        }
    }
}

fn display_width(s: &str) -> usize {
    s.chars().filter(|&c| !('\u{0300}'..='\u{036f}').contains(&c)).count()
}

/// Draw `t` as a grid of boxes. Cells of the inner diagram of a skew shape
/// are left blank, without borders.
pub fn render<E: Letter>(t: &Tableau<E>, style: Style) -> String {
    let g = style.glyphs();
    let shape = t.shape();
    let rows = shape.num_rows();
    let cols = shape.outer().row_len(1);
    let unicode = style == Style::Unicode;
    let labels: Vec<String> = t.entries().iter().map(|e| e.render(unicode)).collect();
    let width = labels.iter().map(|s| display_width(s)).max().unwrap_or(1) + 2;

    let exists = |i: usize, j: usize| i >= 1 && j >= 1 && shape.contains(Cell { row: i, col: j });
    let seg = |k: usize, j: usize| exists(k, j) || exists(k + 1, j);
    let vert = |i: usize, j: usize| exists(i, j.wrapping_sub(1)) || exists(i, j);

    let mut lines = Vec::with_capacity(2 * rows + 1);
    for k in 0..=rows {
        let mut line = String::new();
        for j in 1..=cols + 1 {
            let corner = seg(k, j - 1) || seg(k, j) || vert(k, j) || vert(k + 1, j);
            line.push(if corner { g.corner } else { ' ' });
            if j <= cols {
                let fill = if seg(k, j) { g.horiz } else { ' ' };
                line.extend(std::iter::repeat_n(fill, width));
            }
        }
        lines.push(line.trim_end().to_string());
        if k == rows {
            break;
        }
        let i = k + 1;
        let mut line = String::new();
        for j in 1..=cols + 1 {
            line.push(if vert(i, j) { g.vert } else { ' ' });
            if j > cols {
                break;
            }
            match shape.index_of(Cell { row: i, col: j }) {
                Some(idx) => {
                    let label = &labels[idx];
                    let pad = width - display_width(label);
                    let left = pad / 2;
                    line.push_str(&" ".repeat(left));
                    line.push_str(label);
                    line.push_str(&" ".repeat(pad - left));
                }
                None => line.push_str(&" ".repeat(width)),
            }
        }
        lines.push(line.trim_end().to_string());
    }
    let mut out = lines.join("\n");
    out.push('\n');
    out
}
