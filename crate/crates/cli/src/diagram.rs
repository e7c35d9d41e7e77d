//! Braid diagrams, read top to bottom. In a positive generator the strand
//! drawn as `/` passes over.

use std::fmt::Write;

use lorenz_knots::braids::BraidWord;

const GAP: f64 = 40.0;
const ROW: f64 = 40.0;
const MARGIN: f64 = 20.0;

fn x(pos: usize) -> f64 {
    MARGIN + GAP * pos as f64
}

fn y(level: usize) -> f64 {
    MARGIN + ROW * level as f64
}

fn polyline(out: &mut String, class: &str, pts: &[(f64, f64)]) {
    let pts: Vec<String> = pts.iter().map(|(a, b)| format!("{a:.1},{b:.1}")).collect();
    writeln!(out, r#"    <polyline class="{class}" points="{}"/>"#, pts.join(" ")).unwrap();
}

/// SVG with one `crossing` group per generator, drawn as an over-strand
/// polyline and an under-strand broken around it.
pub fn svg(b: &BraidWord) -> String {
    let n = b.strands();
    let levels = b.gens().len();
    let width = 2.0 * MARGIN + GAP * (n.max(1) - 1) as f64;
    let height = 2.0 * MARGIN + ROW * levels.max(1) as f64;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width:.1} {height:.1}" width="{width:.1}" height="{height:.1}" data-strands="{n}" data-crossings="{levels}">"#
    )
    .unwrap();
    writeln!(out, r#"  <g class="strands" fill="none" stroke="black" stroke-width="2">"#).unwrap();
    // Vertical runs of each position between the crossings that involve it.
    for pos in 0..n {
        let mut start = 0;
        for (k, g) in b.gens().iter().enumerate() {
            if g.index == pos || g.index == pos + 1 {
                if k > start {
                    polyline(&mut out, "strand", &[(x(pos), y(start)), (x(pos), y(k))]);
                }
                start = k + 1;
            }
        }
        let end = levels.max(1);
        if end > start {
            polyline(&mut out, "strand", &[(x(pos), y(start)), (x(pos), y(end))]);
        }
    }
    writeln!(out, "  </g>").unwrap();
    writeln!(out, r#"  <g class="crossings" fill="none" stroke="black" stroke-width="2">"#).unwrap();
    for (k, g) in b.gens().iter().enumerate() {
        let (l, r) = (x(g.index - 1), x(g.index));
        let (top, bottom) = (y(k), y(k + 1));
        let (mx, my) = ((l + r) / 2.0, (top + bottom) / 2.0);
        let d = 0.2;
        let (dx, dy) = ((r - l) * d, (bottom - top) * d);
        // `/` runs from top right to bottom left.
        let slash = [(r, top), (l, bottom)];
        let backslash = [(l, top), (r, bottom)];
        let (over, under) = if g.positive { (slash, backslash) } else { (backslash, slash) };
        let (u0, u1) = (under[0], under[1]);
        let toward_start = if u0.0 < u1.0 { (mx - dx, my - dy) } else { (mx + dx, my - dy) };
        let toward_end = if u0.0 < u1.0 { (mx + dx, my + dy) } else { (mx - dx, my + dy) };
        writeln!(out, r#"   <g class="crossing" data-generator="{}">"#, g.to_signed()).unwrap();
        polyline(&mut out, "over", &over);
        polyline(&mut out, "under", &[u0, toward_start]);
        polyline(&mut out, "under", &[toward_end, u1]);
        writeln!(out, "   </g>").unwrap();
    }
    writeln!(out, "  </g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}

/// ASCII picture: three rows per generator, strands four columns apart.
pub fn text(b: &BraidWord) -> String {
    let n = b.strands();
    let width = 4 * (n - 1) + 1;
    let blank = || {
        let mut row = vec![' '; width];
        for pos in 0..n {
            row[4 * pos] = '|';
        }
        row
    };
    let mut rows: Vec<Vec<char>> = Vec::new();
    let mut header = vec![' '; width];
    for pos in 0..n {
        let label = ((pos + 1) % 10).to_string();
        header[4 * pos] = label.chars().next().unwrap();
    }
    rows.push(header);
    rows.push(blank());
    for g in b.gens() {
        let c = 4 * (g.index - 1);
        let mut top = blank();
        let mut mid = blank();
        let mut bottom = blank();
        for row in [&mut top, &mut mid, &mut bottom] {
            row[c] = ' ';
            row[c + 4] = ' ';
        }
        top[c + 1] = '\\';
        top[c + 3] = '/';
        mid[c + 2] = if g.positive { '/' } else { '\\' };
        bottom[c + 1] = '/';
        bottom[c + 3] = '\\';
        rows.extend([top, mid, bottom, blank()]);
    }
    let mut out = String::new();
    for row in rows {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_crossing_text() {
        let b = BraidWord::from_signed(2, &[1]).unwrap();
        assert_eq!(text(&b), "1   2\n|   |\n \\ /\n  /\n / \\\n|   |\n");
        let b = BraidWord::from_signed(2, &[-1]).unwrap();
        assert!(text(&b).contains("\n  \\\n"));
    }

    #[test]
    fn trivial_braid() {
        let b = BraidWord::trivial(1);
        assert_eq!(text(&b), "1\n|\n");
        assert!(svg(&b).contains(r#"data-crossings="0""#));
    }

    #[test]
    fn svg_crossings() {
        let b = BraidWord::from_signed(3, &[1, -2, 1, -2]).unwrap();
        let s = svg(&b);
        assert_eq!(s.matches(r#"class="crossing""#).count(), 4);
        assert_eq!(s.matches(r#"class="under""#).count(), 8);
        assert_eq!(s, svg(&b));
    }
}
