use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("half-edge `{0}` is used more than once")]
    DuplicateHalfEdge(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown half-edge `{0}`")]
    UnknownHalfEdge(String),
    #[error("half-edge `{0}` is not attached to any edge")]
    UnpairedHalfEdge(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("graph has {0} edges; at most 64 are supported")]
    TooManyEdges(usize),
    #[error("edge `{0}` is a loop and cannot be contracted")]
    ContractLoop(String),
    #[error("edge subset is not contained in the allowed edges")]
    EdgeSubsetOutOfRange,
    #[error("the ribbon graph is not connected")]
    Disconnected,
    #[error("the embedding is not cellular")]
    NotCellular,
    #[error("edge set is not a quasi-tree (it has {0} boundary components)")]
    NotQuasiTree(usize),
    #[error("edge order must list each of the {0} edges exactly once")]
    BadOrder(usize),
    #[error("cannot substitute a non-monomial for {var} raised to {exp}")]
    NonMonomialSubstitution { var: char, exp: String },
    #[error("substitution leaves the half-integer exponent grid")]
    OffGrid,
    #[error("polynomial syntax error at byte {pos}: {msg}")]
    PolySyntax { pos: usize, msg: String },
    #[error("no quasi-tree accounts for spanning subgraph {0:#x}")]
    NoQuasiTreeMatch(u64),
}
