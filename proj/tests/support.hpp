#pragma once

#include <optional>
#include <string>

#include "aiecon/errors.hpp"

template <typename Fn>
std::optional<aiecon::errc> thrown_code(Fn&& fn) {
    try {
        fn();
        return std::nullopt;
    } catch (const aiecon::Error& e) {
        return e.code();
    }
}

template <typename Fn>
std::string thrown_message(Fn&& fn) {
    try {
        fn();
        return {};
    } catch (const aiecon::Error& e) {
        return e.what();
    }
}

inline bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}
