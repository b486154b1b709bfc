use crate::relational::EquationSystem;

/// Defect found while trying to read a multiplication table as a group.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupDefect {
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    MissingInverse(usize),
    #[error("table is not a Latin square (row or column {0} repeats a value)")]
    NotLatinSquare(usize),
}

/// Which budget bound a request exceeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BudgetKind {
    Variables,
    Universe,
    Exponent,
    Order,
}

impl std::fmt::Display for BudgetKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            BudgetKind::Variables => "variable count",
            BudgetKind::Universe => "universe size",
            BudgetKind::Exponent => "power exponent",
            BudgetKind::Order => "semigroup order",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("table entry at row {row}, column {col} is {value}, outside 0..{size}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("table has {found} entries, expected {expected} for order {size}")]
    WrongTableShape {
        size: usize,
        expected: usize,
        found: usize,
    },
    #[error(
        "associativity fails at ({a}, {b}, {c}): ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}"
    )]
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
        left: usize,
        right: usize,
    },
    #[error("not a group: {0}")]
    NotAGroup(GroupDefect),
    #[error("sandwich matrix entry at row {row}, column {col} must be the group identity")]
    NotNormalized { row: usize, col: usize },
    #[error("sandwich matrix entry at row {row}, column {col} is {value}, not a group element id")]
    BadSandwichEntry { row: usize, col: usize, value: usize },
    #[error("sandwich matrix has wrong shape: expected {i_size} rows of {lambda_size} entries")]
    BadSandwichShape { i_size: usize, lambda_size: usize },
    #[error("Rees spec sizes must be positive (lambda_size {lambda_size}, i_size {i_size})")]
    EmptyReesIndex { lambda_size: usize, i_size: usize },
    #[error("semigroup is not simple: {witness} generates a proper ideal")]
    NotSimple { witness: usize },
    #[error("semigroup is not a homogroup: kernel is not a group")]
    NotHomogroup,
    #[error("subset is not closed: {a}*{b} = {product} lies outside it")]
    NotClosed { a: usize, b: usize, product: usize },
    #[error("subset member {0} is out of range")]
    BadSubsetMember(usize),
    #[error("unknown relation {0}")]
    UnknownRelation(String),
    #[error("relation {name} has arity {expected}, atom supplies {found} arguments")]
    ArityMismatch {
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("variable {0} does not appear in the solution set")]
    UnknownVariable(String),
    #[error("constant id {value} is outside the universe 0..{size}")]
    ConstantOutOfRange { value: usize, size: usize },
    #[error("tuple constant {found:?} where a base element id was expected")]
    TupleInBaseContext { found: Vec<usize> },
    #[error("constant {found:?} does not have the declared exponent {expected}")]
    RaggedConstant { expected: usize, found: Vec<usize> },
    #[error("base constant #{found} where a tuple constant of the power's exponent was expected")]
    BaseConstantInPowerContext { found: usize },
    #[error("power base is not the predicatization of the supplied semigroup")]
    NotPredicatization,
    #[error("{kind} {value} exceeds the budget of {max}")]
    BudgetExceeded {
        kind: BudgetKind,
        value: usize,
        max: usize,
    },
    #[error("variable name {0} is reserved for compiler-introduced variables")]
    ReservedVariable(String),
    #[error("group-language token '{0}' in a semigroup-language word")]
    GroupTokenInSemigroupWord(String),
    #[error("empty word")]
    EmptyWord,
    #[error("atom not supported by bucket decomposition: {0}")]
    UnsupportedAtom(String),
    #[error("both quasi-identities hold; no counterexample chain exists")]
    QiHolds,
    #[error("quasi-identity violated by (a={a}, b={b}, alpha={alpha}, beta={beta})")]
    QiViolated {
        a: usize,
        b: usize,
        alpha: usize,
        beta: usize,
    },
    #[error("system is inconsistent at coordinate {coordinate}")]
    Inconsistent {
        coordinate: usize,
        witness: Box<EquationSystem>,
    },
    #[error("parse error at line {line}, column {col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("structures have different universe sizes ({left} vs {right})")]
    UniverseMismatch { left: usize, right: usize },
}

impl Error {
    pub(crate) fn parse(line: usize, col: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
