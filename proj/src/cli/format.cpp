#include <charconv>
#include <system_error>

#include "dephasing/cli.hpp"
#include "dephasing/errors.hpp"

namespace dephasing::cli {

std::string format_number(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    if (ec != std::errc{}) throw DomainError("format_number: conversion failed");
    return {buf, end};
}

analytic::TimeGrid GridSpec::build() const {
    if (points < 2) throw DomainError("grid needs at least 2 points");
    return log_spacing ? analytic::TimeGrid::log(t_min, t_max, points)
                       : analytic::TimeGrid::linear(t_min, t_max, points);
}

}  // namespace dephasing::cli
