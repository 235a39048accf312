namespace zariski {}
