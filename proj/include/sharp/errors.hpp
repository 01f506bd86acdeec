#pragma once

#include <stdexcept>
#include <string>

namespace sharp {

/// A combination of words (or of finer basis elements) that is not a sum of
/// complete fibers of the requested algebra.
class NotInAlgebra : public std::runtime_error {
public:
    explicit NotInAlgebra(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sharp
