// Monetary quantities the provisioner optimizes: R_C, L_CC, R_UC and CF.

#pragma once

#include <cassert>
#include <stdexcept>

#include "provsim/domain.hpp"

namespace provsim {

// Coefficients combining the three link communication cost factors
// (hops count, network delay, transfer time over the link bandwidth).
struct CostWeights {
    double w_hops = 1.0;      // currency per hop
    double w_delay = 0.01;    // currency per millisecond
    double w_transfer = 1.0;  // currency per second of transfer

    void validate() const {
        if (!(w_hops >= 0) || !(w_delay >= 0) || !(w_transfer >= 0))
            throw std::invalid_argument("CostWeights: weights must be >= 0");
        if (!(w_hops > 0 || w_delay > 0 || w_transfer > 0))
            throw std::invalid_argument("CostWeights: at least one weight must be > 0");
    }
};

// L_CC = w_hops * hops + w_delay * delay_ms + w_transfer * (payload / bandwidth).
inline double link_communication_cost(const NetworkLink& link, double payload_mb,
                                      const CostWeights& weights) {
    assert(payload_mb >= 0);
    return weights.w_hops * static_cast<double>(link.hops_count) +
           weights.w_delay * link.delay_ms +
           weights.w_transfer * (payload_mb / link.bandwidth_mbps);
}

// CF = R_C + L_CC, the owner-offer selection criterion.
inline double cost_factor(double r_c, double l_cc) {
    assert(r_c >= 0 && l_cc >= 0);
    return r_c + l_cc;
}

// R_UC has the same two constituents as CF and is the same quantity here.
inline double resource_utilization_cost(double r_c, double l_cc) {
    return cost_factor(r_c, l_cc);
}

}  // namespace provsim
