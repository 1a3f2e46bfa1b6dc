// Generated by generate_golden.py -- do not edit by hand.
// Reference values from mpmath (dps=40), printed to 32 significant digits;
// the double literals below are those values rounded to nearest.
#pragma once

namespace golden {

struct GoldenCase {
  const char* name;
  const char* kind;   // beta_pq | gamma_p | phi | phi_deriv | log_gamma
  double params[6];   // meaning depends on kind, unused slots 0
  double value;
};

inline constexpr GoldenCase kCases[] = {
    // 0.0070298584066096562392412705303540
    {"bpq_x1_y1_p1_q1", "beta_pq", {1.0, 1.0, 1.0, 1.0, 0.0, 0.0}, 0.0070298584066096562392412705303540},
    // 0.00081151198625972451577682125340080
    {"bpq_x2_y3_p1_q1", "beta_pq", {2.0, 3.0, 1.0, 1.0, 0.0, 0.0}, 0.00081151198625972451577682125340080},
    // 0.0055213415030823092076605744252693
    {"bpq_x1_y2_p05_q15", "beta_pq", {1.0, 2.0, 0.5, 1.5, 0.0, 0.0}, 0.0055213415030823092076605744252693},
    // 0.00037838104615707581761339855167507
    {"bpq_x3_y3_p1_q1", "beta_pq", {3.0, 3.0, 1.0, 1.0, 0.0, 0.0}, 0.00037838104615707581761339855167507},
    // 0.00043313094010264869816342270172573
    {"bpq_x2_y4_p1_q1", "beta_pq", {2.0, 4.0, 1.0, 1.0, 0.0, 0.0}, 0.00043313094010264869816342270172573},
    // 0.00018919052307853790880669927583754
    {"bpq_x3_y4_p1_q1", "beta_pq", {3.0, 4.0, 1.0, 1.0, 0.0, 0.0}, 0.00018919052307853790880669927583754},
    // 0.00081151198625972451577682125340080
    {"bpq_x3_y2_p1_q1", "beta_pq", {3.0, 2.0, 1.0, 1.0, 0.0, 0.0}, 0.00081151198625972451577682125340080},
    // 0.0010803932445256545722901715049746
    {"bpq_x1_y4_p1_q1", "beta_pq", {1.0, 4.0, 1.0, 1.0, 0.0, 0.0}, 0.0010803932445256545722901715049746},
    // 0.014723862439502512745586142635614
    {"bpq_x2_y2_p05_q05", "beta_pq", {2.0, 2.0, 0.5, 0.5, 0.0, 0.0}, 0.014723862439502512745586142635614},
    // 0.00055320160849302968516648532358005
    {"bpq_x2_y2_p125_q125", "beta_pq", {2.0, 2.0, 1.25, 1.25, 0.0, 0.0}, 0.00055320160849302968516648532358005},
    // 0.000023113316413298056651330577412531
    {"bpq_x2_y2_p2_q2", "beta_pq", {2.0, 2.0, 2.0, 2.0, 0.0, 0.0}, 0.000023113316413298056651330577412531},
    // 0.0073619312197512563727930713178071
    {"bpq_x2_y3_p05_q05", "beta_pq", {2.0, 3.0, 0.5, 0.5, 0.0, 0.0}, 0.0073619312197512563727930713178071},
    // 0.000095278392432061795223290923937293
    {"bpq_x2_y3_p15_q15", "beta_pq", {2.0, 3.0, 1.5, 1.5, 0.0, 0.0}, 0.000095278392432061795223290923937293},
    // 0.23987554393612289473607300327359
    {"gp_z05_p1", "gamma_p", {0.5, 1.0, 0.0, 0.0, 0.0, 0.0}, 0.23987554393612289473607300327359},
    // 0.27973176363304485456919761407082
    {"gp_z1_p1", "gamma_p", {1.0, 1.0, 0.0, 0.0, 0.0, 0.0}, 0.27973176363304485456919761407082},
    // 0.89955338294760605823162895469545
    {"gp_z25_p07", "gamma_p", {2.5, 0.7, 0.0, 0.0, 0.0, 0.0}, 0.89955338294760605823162895469545},
    // 0.088204453120118236283339475537484
    {"phi_b15_g3_z2_p1_q05", "phi", {1.5, 3.0, 2.0, 1.0, 0.5, 0.0}, 0.088204453120118236283339475537484},
    // 0.0086092842110741366128207239618763
    {"phi_b05_g2_zm2_p05_q1", "phi", {0.5, 2.0, -2.0, 0.5, 1.0, 0.0}, 0.0086092842110741366128207239618763},
    // 0.030564547719393617405049558845881
    {"phi_b05_g25_z2_p1_q05", "phi", {0.5, 2.5, 2.0, 1.0, 0.5, 0.0}, 0.030564547719393617405049558845881},
    // 0.049190853593094776396313997228662
    {"phi_b05_g15_z2_p1_q05", "phi", {0.5, 1.5, 2.0, 1.0, 0.5, 0.0}, 0.049190853593094776396313997228662},
    // 0.0030615409870663661799103606634844
    {"dphi2_b15_g3_z05_p1_q1", "phi_deriv", {1.5, 3.0, 0.5, 1.0, 1.0, 2.0}, 0.0030615409870663661799103606634844},
    // 6.9071788853838536825123446680770
    {"lg_0001", "log_gamma", {0.001, 0.0, 0.0, 0.0, 0.0, 0.0}, 6.9071788853838536825123446680770},
    // 2.2527126517342059598697016463685
    {"lg_01", "log_gamma", {0.1, 0.0, 0.0, 0.0, 0.0, 0.0}, 2.2527126517342059598697016463685},
    // 0.57236494292470008707171367567653
    {"lg_05", "log_gamma", {0.5, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.57236494292470008707171367567653},
    // -0.12078223763524522234551844578165
    {"lg_15", "log_gamma", {1.5, 0.0, 0.0, 0.0, 0.0, 0.0}, -0.12078223763524522234551844578165},
    // 7.0521854507385394449257492531330
    {"lg_725", "log_gamma", {7.25, 0.0, 0.0, 0.0, 0.0, 0.0}, 7.0521854507385394449257492531330},
    // 115.90007047041453012342033907415
    {"lg_425", "log_gamma", {42.5, 0.0, 0.0, 0.0, 0.0, 0.0}, 115.90007047041453012342033907415},
    // 7550.5509010778948957298355677377
    {"lg_12345", "log_gamma", {1234.5, 0.0, 0.0, 0.0, 0.0, 0.0}, 7550.5509010778948957298355677377},
    // 82099.717496442377272648958097694
    {"lg_1e4", "log_gamma", {10000.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 82099.717496442377272648958097694},
};

}  // namespace golden
