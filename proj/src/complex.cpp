#include "qdilog/complex.hpp"

namespace qdilog {

// Complex helpers live in the header; this translation unit anchors the
// library target and hosts nothing else for now.

}  // namespace qdilog
