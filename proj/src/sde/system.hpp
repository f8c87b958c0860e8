#pragma once
// Truncated SDE systems in flat real coordinates:
//   du = -rate .* u dt + F(u) dt + sigma(u) dW.
// The linear dissipative part is separated out so the integrator can apply it
// exactly per component; F and the noise map stay explicit.

#include <string>
#include <vector>

namespace ergo::sde {

class SdeSystem {
   public:
    virtual ~SdeSystem() = default;
    virtual std::size_t dim() const = 0;
    virtual const std::vector<double>& decay_rates() const = 0;
    // out += F(u) (everything except the exactly-integrated linear part)
    virtual void add_drift(const double* u, double* out) const = 0;
    virtual int channels() const = 0;
    // out += sigma(u) dw
    virtual void add_noise(const double* u, const double* dw, double* out) const = 0;
    virtual std::vector<std::string> functional_names() const = 0;
    virtual void functionals(const double* u, double* out) const = 0;
};

// A generalized-coupling pair: both components driven by the same increments,
// the second receiving a control drift realized through the noise range so it
// carries a Girsanov shift beta.
class CoupledSdeSystem {
   public:
    virtual ~CoupledSdeSystem() = default;
    virtual const SdeSystem& base() const = 0;
    // drift_out += control field; beta_out = channel weights with
    // sigma(ut) beta = control field.
    virtual void control(const double* u, const double* ut, double* drift_out,
                         double* beta_out) const = 0;
    virtual std::vector<std::string> pair_functional_names() const = 0;
    virtual void pair_functionals(const double* u, const double* ut,
                                  double* out) const = 0;
};

}  // namespace ergo::sde
