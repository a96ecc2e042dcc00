#pragma once

namespace igrfv {

// Selects between the OpenMP-threaded and single-threaded path of a kernel.
// Both paths run the same arithmetic in the same per-element order, so their
// results are bitwise identical.
enum class Exec { serial, parallel };

int thread_count(Exec exec);

} // namespace igrfv
