//! Worked examples shipped with the library: the diagrams and tableaux the
//! regression suite, the CLI and the browser demo all start from.

use crate::diagram::{DiagramCollection, FerrersDiagram};
use crate::point::pt;

/// A 12×5 semi-standard tableau that is not standard.
pub const SEMI_STANDARD_12X5: &str = "1 1 1 1 1\n1 1 1 2 1\n1 2 2 2 2\n1 2 2 2 3\n2 2 2 3 4\n2 2 2 4 5\n\
                            2 3 3 4 6\n2 3 3 5 6\n2 3 4 6 6\n3 3 5 6 7\n3 4 5 7 7\n3 4 6 7 8\n";

/// The standard tableau with the same column supports as [`SEMI_STANDARD_12X5`].
pub const STANDARD_12X5: &str = "1 3 5 7 8\n1 3 6 7 7\n1 4 4 6 7\n1 4 5 6 6\n2 2 2 5 6\n2 2 3 4 5\n\
                            2 2 3 4 6\n2 3 2 2 4\n2 3 2 3 3\n3 1 1 2 2\n3 1 2 2 1\n3 2 1 1 1\n";

/// A non-standardizable 4-dimensional diagram (95 points) whose fiber needs
/// cubic Gröbner basis elements.
pub fn nonstandardizable_4d() -> FerrersDiagram {
    FerrersDiagram::closure(
        4,
        &[pt(&[1, 3, 4, 4]), pt(&[1, 4, 3, 3]), pt(&[2, 1, 4, 4]), pt(&[2, 2, 3, 3]), pt(&[3, 1, 3, 3]), pt(&[3, 2, 2, 2])],
    )
    .expect("valid generators")
}

/// The smallest standardizable non-rectangular 3-dimensional diagram (20 points).
pub fn smallest_standardizable_3d() -> FerrersDiagram {
    FerrersDiagram::closure(3, &[pt(&[1, 3, 3]), pt(&[2, 2, 3]), pt(&[2, 3, 2]), pt(&[3, 1, 2]), pt(&[3, 2, 1])])
        .expect("valid generators")
}

/// Two different planar diagrams whose joint fiber needs cubic elements.
pub fn mixed_pair() -> DiagramCollection {
    let d1 = FerrersDiagram::closure(2, &[pt(&[4, 1]), pt(&[2, 4])]).expect("valid generators");
    let d2 = FerrersDiagram::closure(2, &[pt(&[1, 3]), pt(&[3, 1])]).expect("valid generators");
    DiagramCollection::new(vec![d1, d2]).expect("same dimension")
}

/// The rectangular box `[1..c_1] × … × [1..c_n]`.
pub fn box_diagram(corner: &[u32]) -> FerrersDiagram {
    FerrersDiagram::closure(corner.len(), &[pt(corner)]).expect("valid corner")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(nonstandardizable_4d().len(), 95);
        assert_eq!(smallest_standardizable_3d().len(), 20);
        let m = mixed_pair();
        assert_eq!((m.diagrams()[0].len(), m.diagrams()[1].len()), (10, 5));
        assert_eq!(box_diagram(&[2, 2, 2]).len(), 8);
    }
}
