#include "shard/complex.hpp"

namespace shard {
// implementation forthcoming in this translation unit
}  // namespace shard
