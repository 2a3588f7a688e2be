pub mod exactmath;
pub mod combitypes;
pub mod symcore;
pub mod mrbsym;
pub mod peakcore;
pub mod reptheory;
pub mod peakcli;
