pub mod cli;
pub mod gbs;
pub mod pairs;
pub mod parse;
pub mod quad;
pub mod report;
pub mod returns;
pub mod words;
