///
/// \file version.hpp
///
#ifndef VHLFIHT_VERSION_HPP
#define VHLFIHT_VERSION_HPP

namespace vhlfiht
{

inline constexpr const char* version_string = "0.1.0";

} // namespace vhlfiht

#endif /* VHLFIHT_VERSION_HPP */
