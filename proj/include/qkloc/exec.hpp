#pragma once

namespace qkloc {

/// Batch kernels take an execution policy; `serial` is the reference path.
enum class Exec { serial, parallel };

}  // namespace qkloc
