#pragma once

#include "cgt/presentation.hpp"
#include "cgt/words.hpp"

#include <memory>
#include <stdexcept>
#include <string>

namespace cgt {

struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Word-problem decision capability for a quotient pi: F2 -> H.
///
/// apply() sends a rank-2 word to a canonical token for its image, so token
/// equality is element equality in H. The shipped fixtures are decidable
/// stand-ins; the construction they feed is parametric in H.
class QuotientOracle {
public:
    virtual ~QuotientOracle() = default;

    virtual std::string name() const = 0;
    virtual Presentation presentation() const = 0;

    virtual std::string apply(const Word& w) const = 0;
    virtual std::string identity_token() const = 0;
    virtual std::string token_mul(const std::string& a, const std::string& b) const = 0;

    virtual bool supports_centrality() const { return true; }

    /// True iff the image of w commutes with the images of both generators
    /// (hence with all of H). Throws CapabilityError when unsupported.
    bool is_central(const Word& w) const;

protected:
    static void check_rank2(const Word& w);
};

/// Fixture registry: "s3", "zsq", "free". Unknown names throw.
std::unique_ptr<QuotientOracle> make_oracle(const std::string& name);

}  // namespace cgt
