#pragma once

namespace ccalc {

// Kernels that shard work across threads keep a serial twin; results must be
// byte-identical between the two and across thread counts.
enum class ExecMode { Serial, Parallel };

int max_threads();
void set_threads(int n);

}  // namespace ccalc
