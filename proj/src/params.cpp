#include "hcsir/params.hpp"

#include <string>

namespace hcsir {

void ScenarioParams::validate() const {
    if (!(lambda > 0.0)) throw DomainError("ScenarioParams: lambda must be positive");
    if (!(c >= 0.0)) throw DomainError("ScenarioParams: c must be non-negative");
    if (!(lambda * c < 1.0))
        throw DomainError("ScenarioParams: lambda*c must be < 1 (got " +
                          std::to_string(lambda * c) + ")");
    if (!(eta > 2.0)) throw DomainError("ScenarioParams: eta must be > 2");
    if (!(xi > 0.0 && xi <= 1.0)) throw DomainError("ScenarioParams: xi must be in (0, 1]");
    if (!(q > 0.0 && q < 1.0)) throw DomainError("ScenarioParams: q must be in (0, 1)");
}

}  // namespace hcsir
