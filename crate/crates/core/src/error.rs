use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("parse error at line {line}, column {column}: expected {expected}")]
    Parse {
        line: usize,
        column: usize,
        expected: String,
    },
    #[error("the system of equations and congruences has no integer solution")]
    EmptyLattice,
    #[error("the polyhedron contains no lattice points")]
    EmptyModule,
    #[error("cone is not pointed")]
    NotPointed,
    #[error("cone is already pointed")]
    AlreadyPointed,
    #[error("generators do not span the working space")]
    NotFullDimensional,
    #[error("monoid is not positive")]
    NotPositive,
    #[error("grading is not positive on {0}")]
    NonPositiveDegree(String),
    #[error("no grading available")]
    NotGraded,
    #[error("simplex rays are linearly dependent")]
    SingularSimplex,
    #[error("requested denominator is not a multiple of the reduced denominator")]
    InexactDivision,
    #[error("homogenized cone is not pointed")]
    NonPointedHomogenization,
    #[error("arithmetic failure: {0}")]
    Arithmetic(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
