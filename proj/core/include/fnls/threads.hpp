#pragma once

namespace fnls {

/// Caps the number of worker threads used by elementwise kernels.
/// 0 means "use the runtime default". Reductions keep a fixed summation
/// tree, so results do not depend on this setting.
void set_threads(int n);

/// Current cap (0 = runtime default).
int threads();

} // namespace fnls
