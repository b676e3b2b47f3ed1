#pragma once

#include <string>

namespace termnet {

/// Porter suffix-stripping stemmer for English, as originally published
/// (steps 1a through 5b, longest-match rule selection within each step).
/// Words of length <= 2 are returned unchanged, matching the reference
/// implementation. Input is expected to be lowercase.
std::string porter_stem(std::string word);

}  // namespace termnet
