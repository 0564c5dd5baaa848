#ifndef ZETAVOL_VERSION_HPP
#define ZETAVOL_VERSION_HPP

namespace zetavol {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace zetavol

#endif  // ZETAVOL_VERSION_HPP
