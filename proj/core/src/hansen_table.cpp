namespace mdcoint::detail {

// Upper-tail quantiles of the asymptotic null distribution of the L_c
// stability statistic for a cointegrating regression with a constant and
// m = 1..6 driftless I(1) regressors. Simulated at T = 1000 with 40000
// replications per row; regenerate with tools/lc_table_gen.
extern const int kLcMaxM;
extern const double kLcPValues[6];
extern const double kLcQuantiles[6][6];

const int kLcMaxM = 6;

const double kLcPValues[6] = {0.20, 0.10, 0.075, 0.05, 0.025, 0.01};

const double kLcQuantiles[6][6] = {
    // p:   0.20     0.10     0.075    0.05     0.025    0.01
    {0.3270, 0.4412, 0.4898, 0.5625, 0.6962, 0.8572},  // m = 1
    {0.4247, 0.5553, 0.6121, 0.6988, 0.8435, 1.0372},  // m = 2
    {0.5241, 0.6665, 0.7262, 0.8086, 0.9634, 1.1478},  // m = 3
    {0.6241, 0.7802, 0.8430, 0.9370, 1.0966, 1.3185},  // m = 4
    {0.7270, 0.8909, 0.9576, 1.0555, 1.2174, 1.4373},  // m = 5
    {0.8216, 0.9960, 1.0689, 1.1638, 1.3294, 1.5433},  // m = 6
};

}  // namespace mdcoint::detail
