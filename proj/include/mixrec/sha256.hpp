#ifndef MIXREC_SHA256_HPP
#define MIXREC_SHA256_HPP

#include <string>

namespace mixrec {

/// FIPS 180-4 SHA-256 of a byte string, returned as lowercase hex.
std::string sha256_hex(const std::string& data);

/// SHA-256 of a file's contents. Throws ConfigError if unreadable.
std::string sha256_file(const std::string& path);

}  // namespace mixrec

#endif  // MIXREC_SHA256_HPP
