//! Hasse-diagram export in Graphviz DOT syntax.
//!
//! The diagram shows the covering relation, which is derived from the
//! order on the fly rather than stored: `a` is covered by `b` when
//! `a < b` with nothing strictly between. Edges point upward
//! (`rankdir = BT` keeps bottom at the bottom), nodes are labeled with the
//! element labels, and the involution can be overlaid as dashed
//! undirected edges between distinct partners. Output order is fixed by
//! element indices, so equal structures export byte-identical text.

use unsharp_core::poset::BoundedInvolutivePoset;

fn quoted(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Renders the Hasse diagram of `p` as a DOT digraph named `name`.
pub fn export_dot(p: &BoundedInvolutivePoset, name: &str, show_involution: bool) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph {} {{\n", quoted(name)));
    out.push_str("  rankdir = BT;\n");
    for x in p.elements() {
        out.push_str(&format!("  {};\n", quoted(p.label(x))));
    }
    for (a, b) in p.covers() {
        out.push_str(&format!(
            "  {} -> {};\n",
            quoted(p.label(a)),
            quoted(p.label(b))
        ));
    }
    if show_involution {
        for x in p.elements() {
            let y = p.inv(x);
            if x.index() < y.index() {
                out.push_str(&format!(
                    "  {} -> {} [dir=none, style=dashed];\n",
                    quoted(p.label(x)),
                    quoted(p.label(y))
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}
