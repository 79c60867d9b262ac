#ifndef CONEXTRACT_PORTER_HPP
#define CONEXTRACT_PORTER_HPP

#include <string>
#include <string_view>

namespace conextract::metrics {

/// Porter (1980) stemmer. Input must be a lowercase ASCII-alphabetic word;
/// anything else is returned unchanged.
std::string porter_stem(std::string_view word);

} // namespace conextract::metrics

#endif // CONEXTRACT_PORTER_HPP
