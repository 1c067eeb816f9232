#pragma once

#include <string>
#include <utility>
#include <variant>

namespace palintiple {

enum class errc {
    not_a_palintiple,
    non_integral,
    out_of_range,
    bad_digits,
    not_eligible,
    no_solution,
    carry_too_large,
    hypothesis_failed,
    constraint_violated,
    degenerate,
    size_exceeded,
    cap_exceeded,
    bound_exceeded,
    no_convergence,
    precondition_failed,
    bad_argument,
    parse_error,
};

const char* errc_name(errc c);

struct Error {
    errc code;
    std::string message;
};

// Minimal expected-style carrier. gcc 11 has no std::expected; this is the
// subset we need: construct from value or Error, query, move the value out.
template <class T>
class Result {
  public:
    Result(T v) : data_(std::move(v)) {}
    Result(Error e) : data_(std::move(e)) {}
    Result(errc c, std::string msg) : data_(Error{c, std::move(msg)}) {}

    bool ok() const { return std::holds_alternative<T>(data_); }
    explicit operator bool() const { return ok(); }

    const T& value() const& { return std::get<T>(data_); }
    T& value() & { return std::get<T>(data_); }
    T&& value() && { return std::get<T>(std::move(data_)); }

    const Error& error() const { return std::get<Error>(data_); }

  private:
    std::variant<T, Error> data_;
};

} // namespace palintiple
