int h2z_placeholder_acceptance;
