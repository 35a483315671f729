/* vim: set sw=4 sts=4 et : */

#ifndef COLORBOUND_GUARD_ERRORS_HH
#define COLORBOUND_GUARD_ERRORS_HH 1

#include <cstdint>
#include <stdexcept>
#include <string>

namespace colorbound
{
    /// An argument is outside the domain of the operation (n > v, a zero part, ...).
    class PreconditionError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// A coloring operation was asked to work on more vertices than the configured cap allows.
    class ResourceGuardError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// An exhaustive enumeration would evaluate more than 2^allowed graphs.
    class BudgetExceeded : public std::runtime_error
    {
        private:
            unsigned _required_bits, _allowed_bits;

        public:
            BudgetExceeded(unsigned required_bits, unsigned allowed_bits);

            auto required_bits() const -> unsigned { return _required_bits; }
            auto allowed_bits() const -> unsigned { return _allowed_bits; }
    };

    /// A proven identity or theorem failed to hold, which can only mean a defect in this code.
    class InternalInconsistency : public std::logic_error
    {
        public:
            using std::logic_error::logic_error;
    };
}

#endif
