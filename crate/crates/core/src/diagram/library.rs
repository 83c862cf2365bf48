use std::fmt;
use std::str::FromStr;

use super::{connected_sum, DiagramError, TrisectionDiagram};
use crate::word::Word;

/// Named diagrams shipped with the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StandardManifold {
    S4,
    CP2,
    CP2Bar,
    S1xS3,
    S2xS2,
}

impl StandardManifold {
    pub const ALL: [StandardManifold; 5] = [
        StandardManifold::S4,
        StandardManifold::CP2,
        StandardManifold::CP2Bar,
        StandardManifold::S1xS3,
        StandardManifold::S2xS2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StandardManifold::S4 => "S4",
            StandardManifold::CP2 => "CP2",
            StandardManifold::CP2Bar => "CP2BAR",
            StandardManifold::S1xS3 => "S1xS3",
            StandardManifold::S2xS2 => "S2xS2",
        }
    }
}

impl fmt::Display for StandardManifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StandardManifold {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| DiagramError::UnknownStandard(s.to_string()))
    }
}

fn build(genus: usize, alpha: &[&str], beta: &[&str], gamma: &[&str]) -> TrisectionDiagram {
    let parse = |ws: &[&str]| {
        ws.iter()
            .map(|w| w.parse::<Word>().expect("library word"))
            .collect::<Vec<_>>()
    };
    TrisectionDiagram::from_words(genus, &parse(alpha), &parse(beta), &parse(gamma))
        .expect("library diagram is valid")
}

/// The genus-0 diagram of `S⁴`, the genus-1 diagrams of `CP²`, its mirror and
/// `S¹×S³`, and a genus-2 diagram of `S²×S²`.
///
/// For `S²×S²` the γ curves are `a1 b2` and `a2 b1`: the graph of the
/// hyperbolic matrix over the α/β splitting, which makes all three pairs
/// standard with `k = 0` and yields the hyperbolic intersection form.
pub fn standard_diagram(which: StandardManifold) -> TrisectionDiagram {
    match which {
        StandardManifold::S4 => build(0, &[], &[], &[]),
        StandardManifold::CP2 => build(1, &["a1"], &["b1"], &["a1 b1"]),
        StandardManifold::CP2Bar => build(1, &["a1"], &["b1"], &["a1 B1"]),
        StandardManifold::S1xS3 => build(1, &["a1"], &["a1"], &["a1"]),
        StandardManifold::S2xS2 => build(2, &["a1", "a2"], &["b1", "b2"], &["a1 b2", "a2 b1"]),
    }
}

/// `CP² # CP²‾`, built by connected sum.
pub fn cp2_sum_cp2bar() -> TrisectionDiagram {
    connected_sum(
        &standard_diagram(StandardManifold::CP2),
        &standard_diagram(StandardManifold::CP2Bar),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_roundtrip() {
        for m in StandardManifold::ALL {
            assert_eq!(m.name().parse::<StandardManifold>().unwrap(), m);
        }
        assert_eq!(
            "RP4".parse::<StandardManifold>(),
            Err(DiagramError::UnknownStandard("RP4".into()))
        );
    }

    #[test]
    fn genera() {
        assert_eq!(standard_diagram(StandardManifold::S4).genus(), 0);
        assert_eq!(standard_diagram(StandardManifold::CP2).genus(), 1);
        assert_eq!(standard_diagram(StandardManifold::S2xS2).genus(), 2);
        assert_eq!(cp2_sum_cp2bar().genus(), 2);
    }
}
