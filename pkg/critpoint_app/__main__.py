from critpoint_app.main import main

raise SystemExit(main())
